// Stdio transport: handshake first, then one id-matched response line per
// request line, flushed per line. Malformed requests produce an error line and
// the loop continues; end of input exits cleanly.

import { createInterface } from 'node:readline';
import type { BackendOptions } from './backends.js';
import { ADVERTISED_TASKS, handleRequest } from './backends.js';
import { errorLine, helloLine, parseRequest, responseLine } from './protocol.js';

export async function serveStdio(options: BackendOptions): Promise<void> {
  process.stdout.write(helloLine(ADVERTISED_TASKS) + '\n');

  const lines = createInterface({ input: process.stdin, crlfDelay: Infinity });
  for await (const raw of lines) {
    const line = raw.trim();
    if (!line) continue;
    process.stdout.write(serveLine(line, options) + '\n');
  }
}

export function serveLine(line: string, options: BackendOptions): string {
  const parsed = parseRequest(line);
  if (!parsed.ok) {
    return errorLine(parsed.id, parsed.message);
  }
  return responseLine(handleRequest(parsed.request, options));
}
