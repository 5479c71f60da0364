import { describe, expect, it } from 'vitest';
import { handleRequest, lexicalSubstitute, type BackendOptions } from '../src/backends.js';
import { loadThesaurus } from '../src/thesaurus.js';

const thesaurus = loadThesaurus();

function options(backend: 'identity' | 'lexical'): BackendOptions {
  return { backend, thesaurus, defaultBeam: 50 };
}

describe('thesaurus', () => {
  it('ships at least 200 irreflexive entries', () => {
    expect(thesaurus.size).toBeGreaterThanOrEqual(200);
    for (const [word, synonym] of thesaurus) {
      expect(word).not.toBe(synonym);
    }
  });
});

describe('identity backend', () => {
  it('returns the request text as the sole candidate at score 1.0', () => {
    const response = handleRequest(
      { id: 'p1', task: 'paraphrase', text: 'A b c.' },
      options('identity'),
    );
    expect(response).toEqual({ id: 'p1', candidates: [{ text: 'A b c.', score: 1.0 }] });
  });
});

describe('lexical backend', () => {
  it('substitutes synonyms and keeps the identity candidate at lower score', () => {
    const response = handleRequest(
      { id: 'p2', task: 'paraphrase', text: 'The big dog was quick.' },
      options('lexical'),
    );
    expect(response.candidates).toEqual([
      { text: 'The large dog was fast.', score: 1.0 },
      { text: 'The big dog was quick.', score: 0.5 },
    ]);
  });

  it('falls back to a single identity candidate when nothing substitutes', () => {
    const response = handleRequest(
      { id: 'p3', task: 'paraphrase', text: 'Zxqv frobnicates.' },
      options('lexical'),
    );
    expect(response.candidates).toEqual([{ text: 'Zxqv frobnicates.', score: 1.0 }]);
  });

  it('preserves casing patterns', () => {
    expect(lexicalSubstitute('Big dogs bark. BIG ones too.', thesaurus)).toBe(
      'Large dogs bark. LARGE ones too.',
    );
  });
});

describe('template distractors backend', () => {
  const passage =
    'The river floods every spring. Farmers plant after the water drops. ' +
    'The harvest comes in late summer. Nothing else happens.';

  it('ranks sentences by question-keyword overlap then position', () => {
    const response = handleRequest(
      {
        id: 'd1',
        task: 'distractors',
        mode: 'extract',
        passage,
        question: 'When does the river flood?',
        answer: 'Every spring.',
        beam: 10,
      },
      options('identity'),
    );
    expect(response.candidates[0]?.text).toBe('The river floods every spring.');
    const scores = response.candidates.map((c) => c.score);
    expect([...scores].sort((a, b) => b - a)).toEqual(scores);
  });

  it('respects the beam limit', () => {
    const response = handleRequest(
      {
        id: 'd2',
        task: 'distractors',
        mode: 'generate',
        passage,
        question: 'Anything?',
        answer: 'A.',
        beam: 2,
      },
      options('identity'),
    );
    expect(response.candidates.length).toBeLessThanOrEqual(2);
  });

  it('uses the default beam when the request omits it', () => {
    const response = handleRequest(
      { id: 'd3', task: 'distractors', mode: 'extract', passage, question: 'Q?', answer: 'A.' },
      { backend: 'identity', thesaurus, defaultBeam: 3 },
    );
    expect(response.candidates.length).toBeLessThanOrEqual(3);
  });
});

describe('determinism', () => {
  it('identical requests produce identical responses', () => {
    const request = {
      id: 'x',
      task: 'distractors',
      mode: 'extract',
      passage: 'One two three. Four five six. Seven eight nine.',
      question: 'What comes after three?',
      answer: 'Four.',
      beam: 5,
    } as const;
    const first = JSON.stringify(handleRequest(request, options('identity')));
    for (let i = 0; i < 10; i += 1) {
      expect(JSON.stringify(handleRequest(request, options('identity')))).toBe(first);
    }
  });
});
