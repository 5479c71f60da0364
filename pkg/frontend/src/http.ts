// HTTP transport: GET returns the handshake record, each POST body is one
// request line and the response body is the matching response line.

import { createServer, type Server } from 'node:http';
import type { BackendOptions } from './backends.js';
import { ADVERTISED_TASKS } from './backends.js';
import { helloLine } from './protocol.js';
import { serveLine } from './stdio.js';

export function createHttpServer(options: BackendOptions): Server {
  return createServer((req, res) => {
    const respond = (body: string) => {
      res.writeHead(200, {
        'Content-Type': 'application/json; charset=utf-8',
        'Content-Length': Buffer.byteLength(body),
      });
      res.end(body);
    };
    if (req.method === 'GET') {
      respond(helloLine(ADVERTISED_TASKS));
      return;
    }
    if (req.method === 'POST') {
      const chunks: Buffer[] = [];
      req.on('data', (chunk) => chunks.push(chunk));
      req.on('end', () => {
        respond(serveLine(Buffer.concat(chunks).toString('utf-8').trim(), options));
      });
      return;
    }
    res.writeHead(405).end();
  });
}

export function serveHttp(options: BackendOptions, port: number): Server {
  const server = createHttpServer(options);
  server.listen(port, '127.0.0.1', () => {
    const address = server.address();
    const actual = typeof address === 'object' && address !== null ? address.port : port;
    process.stderr.write(`advforge-provider listening on http://127.0.0.1:${actual}/\n`);
  });
  return server;
}
