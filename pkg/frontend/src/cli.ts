#!/usr/bin/env node
// advforge-provider [--backend identity|lexical] [--http <port>] [--thesaurus <path>]
//
// Serves the candidate-provider wire protocol over stdio (default) or HTTP.

import type { BackendOptions, ParaphraseBackend } from './backends.js';
import { serveHttp } from './http.js';
import { serveStdio } from './stdio.js';
import { loadThesaurus } from './thesaurus.js';

const DEFAULT_BEAM = 50;

function fail(message: string): never {
  process.stderr.write(`advforge-provider: ${message}\n`);
  process.exit(2);
}

function parseArgs(argv: string[]) {
  let backend: ParaphraseBackend = 'identity';
  let httpPort: number | null = null;
  let thesaurusPath: string | undefined;
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i];
    const next = () => {
      const value = argv[i + 1];
      if (value === undefined) fail(`${arg} needs a value`);
      i += 1;
      return value;
    };
    switch (arg) {
      case '--backend': {
        const value = next();
        if (value !== 'identity' && value !== 'lexical') {
          fail(`unknown backend ${value} (use identity or lexical)`);
        }
        backend = value;
        break;
      }
      case '--http': {
        const value = Number(next());
        if (!Number.isInteger(value) || value < 0 || value > 65_535) {
          fail('--http needs a port number');
        }
        httpPort = value;
        break;
      }
      case '--thesaurus':
        thesaurusPath = next();
        break;
      case '--help':
      case '-h':
        process.stdout.write(
          'usage: advforge-provider [--backend identity|lexical] [--http <port>] ' +
            '[--thesaurus <path>]\n',
        );
        process.exit(0);
        break;
      default:
        fail(`unknown argument ${arg}`);
    }
  }
  return { backend, httpPort, thesaurusPath };
}

const { backend, httpPort, thesaurusPath } = parseArgs(process.argv.slice(2));
const options: BackendOptions = {
  backend,
  thesaurus: loadThesaurus(thesaurusPath),
  defaultBeam: DEFAULT_BEAM,
};

if (httpPort !== null) {
  serveHttp(options, httpPort);
} else {
  serveStdio(options).then(
    () => process.exit(0),
    (err) => {
      process.stderr.write(`advforge-provider: ${err}\n`);
      process.exit(1);
    },
  );
}
