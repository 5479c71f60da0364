// Integration tests against the built dist/cli.js over real pipes.
import { execFile } from 'node:child_process';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, it } from 'vitest';

const CLI = join(dirname(fileURLToPath(import.meta.url)), '..', 'dist', 'cli.js');

async function pipe(input: string, args: string[] = []): Promise<string> {
  return new Promise((resolve, reject) => {
    const child = execFile('node', [CLI, ...args], { maxBuffer: 1 << 24 }, (err, stdout) => {
      if (err) reject(err);
      else resolve(stdout);
    });
    child.stdin?.write(input);
    child.stdin?.end();
  });
}

describe('stdio loop', () => {
  it('emits the handshake first and exits 0 on input close', async () => {
    const stdout = await pipe('');
    const lines = stdout.trim().split('\n');
    expect(lines).toHaveLength(1);
    expect(JSON.parse(lines[0]!)).toMatchObject({
      hello: { protocol: 1, tasks: ['paraphrase', 'distractors'] },
    });
  });

  it('answers three requests with id-matched responses', async () => {
    const requests = ['a', 'b', 'c'].map((id) =>
      JSON.stringify({ id, task: 'paraphrase', text: `text ${id}.` }),
    );
    const stdout = await pipe(requests.join('\n') + '\n');
    const lines = stdout.trim().split('\n');
    expect(lines).toHaveLength(4);
    const ids = lines.slice(1).map((line) => JSON.parse(line).id);
    expect(ids).toEqual(['a', 'b', 'c']);
  });

  it('continues serving after a malformed line', async () => {
    const good = JSON.stringify({ id: 'ok', task: 'paraphrase', text: 'Fine.' });
    const stdout = await pipe('garbage line\n' + good + '\n');
    const lines = stdout.trim().split('\n');
    expect(lines).toHaveLength(3);
    expect(JSON.parse(lines[1]!)).toHaveProperty('error');
    expect(JSON.parse(lines[2]!)).toMatchObject({ id: 'ok' });
  });

  it('is byte-deterministic over a 100-request round trip', async () => {
    const requests: string[] = [];
    for (let i = 0; i < 100; i += 1) {
      if (i % 2 === 0) {
        requests.push(
          JSON.stringify({ id: `p${i}`, task: 'paraphrase', text: `The big house number ${i}.` }),
        );
      } else {
        requests.push(
          JSON.stringify({
            id: `d${i}`,
            task: 'distractors',
            mode: i % 4 === 1 ? 'extract' : 'generate',
            passage: 'The river floods every spring. Farmers plant later. Harvest comes in summer.',
            question: `Question number ${i}?`,
            answer: 'Every spring.',
            beam: (i % 7) + 1,
          }),
        );
      }
    }
    const input = requests.join('\n') + '\n';
    const first = await pipe(input, ['--backend', 'lexical']);
    const second = await pipe(input, ['--backend', 'lexical']);
    expect(second).toBe(first);
    const lines = first.trim().split('\n');
    expect(lines).toHaveLength(101);
    const seen = new Set<string>();
    for (const line of lines.slice(1)) {
      const record = JSON.parse(line);
      expect(record).not.toHaveProperty('error');
      expect(seen.has(record.id)).toBe(false);
      seen.add(record.id);
    }
    expect(seen.size).toBe(100);
  });
});
