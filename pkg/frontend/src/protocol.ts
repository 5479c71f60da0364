// Wire protocol types and validation. One JSON record per line:
//   handshake  {"hello": {"protocol": 1, "tasks": [...]}}   (provider's first line)
//   request    {"id", "task": "paraphrase", "text", "template"?, "beam"?}
//              {"id", "task": "distractors", "mode", "passage", "question", "answer", "beam"}
//   response   {"id", "candidates": [{"text", "score"}, ...]}
//   error      {"error": {"id"?, "message"}}

export const PROTOCOL_VERSION = 1;

export interface Candidate {
  text: string;
  score: number;
}

export interface ParaphraseRequest {
  id: string;
  task: 'paraphrase';
  text: string;
  template?: string;
  beam?: number;
}

export interface DistractorsRequest {
  id: string;
  task: 'distractors';
  mode: 'extract' | 'generate';
  passage: string;
  question: string;
  answer: string;
  beam?: number;
}

export type Request = ParaphraseRequest | DistractorsRequest;

export interface Response {
  id: string;
  candidates: Candidate[];
}

export interface ErrorLine {
  error: { id: string | null; message: string };
}

export function helloLine(tasks: string[]): string {
  return JSON.stringify({ hello: { protocol: PROTOCOL_VERSION, tasks } });
}

export function errorLine(id: string | null, message: string): string {
  return JSON.stringify({ error: { id, message } });
}

export function responseLine(response: Response): string {
  return JSON.stringify(response);
}

type Parsed = { ok: true; request: Request } | { ok: false; id: string | null; message: string };

export function parseRequest(line: string): Parsed {
  let raw: unknown;
  try {
    raw = JSON.parse(line);
  } catch {
    return { ok: false, id: null, message: 'request is not valid JSON' };
  }
  if (typeof raw !== 'object' || raw === null || Array.isArray(raw)) {
    return { ok: false, id: null, message: 'request is not an object' };
  }
  const record = raw as Record<string, unknown>;
  const id = typeof record.id === 'string' ? record.id : null;
  if (id === null) {
    return { ok: false, id: null, message: 'request is missing a string id' };
  }
  if (record.task === 'paraphrase') {
    if (typeof record.text !== 'string') {
      return { ok: false, id, message: 'paraphrase request is missing text' };
    }
    if (record.beam !== undefined && typeof record.beam !== 'number') {
      return { ok: false, id, message: 'beam must be a number' };
    }
    return {
      ok: true,
      request: {
        id,
        task: 'paraphrase',
        text: record.text,
        template: typeof record.template === 'string' ? record.template : undefined,
        beam: typeof record.beam === 'number' ? record.beam : undefined,
      },
    };
  }
  if (record.task === 'distractors') {
    if (record.mode !== 'extract' && record.mode !== 'generate') {
      return { ok: false, id, message: `unknown distractors mode ${JSON.stringify(record.mode)}` };
    }
    for (const field of ['passage', 'question', 'answer'] as const) {
      if (typeof record[field] !== 'string') {
        return { ok: false, id, message: `distractors request is missing ${field}` };
      }
    }
    return {
      ok: true,
      request: {
        id,
        task: 'distractors',
        mode: record.mode,
        passage: record.passage as string,
        question: record.question as string,
        answer: record.answer as string,
        beam: typeof record.beam === 'number' ? record.beam : undefined,
      },
    };
  }
  return { ok: false, id, message: `unknown task ${JSON.stringify(record.task)}` };
}
