import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

export type Thesaurus = Map<string, string>;

export function defaultThesaurusPath(): string {
  // dist/ and data/ are siblings under the package root (same layout as src/)
  return join(dirname(fileURLToPath(import.meta.url)), '..', 'data', 'thesaurus.tsv');
}

export function loadThesaurus(path: string = defaultThesaurusPath()): Thesaurus {
  const table: Thesaurus = new Map();
  const content = readFileSync(path, 'utf-8');
  for (const [lineNumber, raw] of content.split('\n').entries()) {
    const line = raw.trim();
    if (!line || line.startsWith('#')) continue;
    const parts = line.split('\t');
    if (parts.length !== 2 || !parts[0] || !parts[1]) {
      throw new Error(`${path}:${lineNumber + 1}: expected "word<TAB>synonym"`);
    }
    if (parts[0] === parts[1]) {
      throw new Error(`${path}:${lineNumber + 1}: word maps to itself`);
    }
    if (!table.has(parts[0])) table.set(parts[0], parts[1]);
  }
  return table;
}
