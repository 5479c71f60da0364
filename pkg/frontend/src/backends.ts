// Deterministic candidate backends. None of these touch a model: identity
// echoes, lexical substitutes from the shipped thesaurus, template_distractors
// ranks passage sentences against question keywords. A neural paraphraser or
// generator plugs in by implementing handleRequest with the same contract.

import type { Candidate, Request, Response } from './protocol.js';
import type { Thesaurus } from './thesaurus.js';

export type ParaphraseBackend = 'identity' | 'lexical';

export interface BackendOptions {
  backend: ParaphraseBackend;
  thesaurus: Thesaurus;
  defaultBeam: number; // used when a distractors request omits beam
}

const STOPWORDS = new Set(
  ('a an the this that these those and or but if while of in on at by with from ' +
    'into to for as is are was were be been being do does did have has had it its ' +
    'he she they we you i his her their our your not no nor so than then when where ' +
    'which what who whom why how all any both each few more most some such only own ' +
    'same very can will just about between during before after above below under over').split(' '),
);

function splitSentences(text: string): string[] {
  const out: string[] = [];
  let start = 0;
  const boundary = /[.!?]+(?=\s+[A-Z0-9"'(\[])/g;
  let match: RegExpExecArray | null;
  while ((match = boundary.exec(text)) !== null) {
    const end = match.index + match[0].length;
    const piece = text.slice(start, end).trim();
    if (piece) out.push(piece);
    start = end;
  }
  const tail = text.slice(start).trim();
  if (tail) out.push(tail);
  return out;
}

function words(text: string): string[] {
  return text.toLowerCase().match(/[a-z0-9']+/g) ?? [];
}

function keywordSet(text: string): Set<string> {
  return new Set(words(text).filter((w) => !STOPWORDS.has(w)));
}

function matchCase(original: string, replacement: string): string {
  if (original === original.toUpperCase() && original.length > 1) {
    return replacement.toUpperCase();
  }
  if (original[0] && original[0] === original[0].toUpperCase()) {
    return replacement.charAt(0).toUpperCase() + replacement.slice(1);
  }
  return replacement;
}

export function lexicalSubstitute(text: string, thesaurus: Thesaurus): string {
  return text.replace(/[A-Za-z']+/g, (token) => {
    const synonym = thesaurus.get(token.toLowerCase());
    return synonym === undefined ? token : matchCase(token, synonym);
  });
}

function paraphraseCandidates(text: string, options: BackendOptions): Candidate[] {
  if (options.backend === 'identity') {
    return [{ text, score: 1.0 }];
  }
  const substituted = lexicalSubstitute(text, options.thesaurus);
  if (substituted === text) {
    return [{ text, score: 1.0 }];
  }
  return [
    { text: substituted, score: 1.0 },
    { text, score: 0.5 },
  ];
}

function distractorCandidates(
  passage: string,
  question: string,
  beam: number,
): Candidate[] {
  const keywords = keywordSet(question);
  const sentences = splitSentences(passage);
  const scored = sentences.map((sentence, position) => {
    const overlap = words(sentence).filter((w) => keywords.has(w)).length;
    // keyword overlap dominates; earlier sentences win ties via positional decay
    return { text: sentence, score: overlap + 1 / (position + 2) };
  });
  scored.sort((a, b) => b.score - a.score);
  return scored.slice(0, Math.max(beam, 0));
}

export function handleRequest(request: Request, options: BackendOptions): Response {
  if (request.task === 'paraphrase') {
    let candidates = paraphraseCandidates(request.text, options);
    if (request.beam !== undefined) {
      candidates = candidates.slice(0, Math.max(request.beam, 0));
    }
    return { id: request.id, candidates };
  }
  const beam = request.beam ?? options.defaultBeam;
  return {
    id: request.id,
    candidates: distractorCandidates(request.passage, request.question, beam),
  };
}

export const ADVERTISED_TASKS = ['paraphrase', 'distractors'];
