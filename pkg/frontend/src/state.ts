// Composer state and the staleness guard. Every line buffer carries a
// generation counter bumped on each edit; a server response is applied
// only if it answers the generation still in the buffer, so findings on
// screen always describe the text on screen.

import type { Finding, ReportDoc, SessionDoc, UpdateResponse } from "./api.js";

export interface LineState {
  text: string;
  generation: number;
  pending: boolean;
  queued: boolean; // edited again while a request was in flight
  findings: Finding[];
}

export interface ComposerState {
  session: SessionDoc | null;
  lines: LineState[][];
  poemFindings: Finding[];
  verdict: "pass" | "fail" | null;
  revision: number;
  banner: string | null;
  focused: { stanza: number; line: number } | null;
}

export function emptyState(): ComposerState {
  return {
    session: null,
    lines: [],
    poemFindings: [],
    verdict: null,
    revision: 0,
    banner: null,
    focused: null,
  };
}

export function loadSession(state: ComposerState, doc: SessionDoc): void {
  state.session = doc;
  state.revision = doc.revision;
  state.lines = doc.draft.map((stanza) =>
    stanza.map((text) => ({
      text,
      generation: 0,
      pending: false,
      queued: false,
      findings: [],
    })),
  );
  state.poemFindings = [];
  state.verdict = null;
  state.banner = null;
  state.focused = null;
}

export function lineAt(
  state: ComposerState,
  stanza: number,
  line: number,
): LineState {
  return state.lines[stanza - 1][line - 1];
}

/** Record an edit and return the generation a request for it should carry. */
export function beginEdit(
  state: ComposerState,
  stanza: number,
  line: number,
  text: string,
): number {
  const ls = lineAt(state, stanza, line);
  ls.text = text;
  ls.generation += 1;
  if (ls.pending) ls.queued = true;
  return ls.generation;
}

/**
 * Apply a line-update response unless the buffer has moved on. Returns
 * true when applied; a stale response is discarded entirely.
 */
export function applyUpdate(
  state: ComposerState,
  stanza: number,
  line: number,
  generation: number,
  resp: UpdateResponse,
): boolean {
  const ls = lineAt(state, stanza, line);
  ls.pending = false;
  if (generation !== ls.generation) return false;
  ls.findings = resp.line.findings;
  state.poemFindings = resp.poem.findings;
  state.verdict = resp.verdict;
  state.revision = resp.revision;
  state.banner = null;
  return true;
}

/** A failed request never touches the buffer; it only raises the banner. */
export function applyFailure(
  state: ComposerState,
  stanza: number,
  line: number,
  message: string,
): void {
  const ls = lineAt(state, stanza, line);
  ls.pending = false;
  state.banner = message;
}

export function applyValidation(state: ComposerState, report: ReportDoc): void {
  state.verdict = report.verdict;
  if (report.revision !== undefined) state.revision = report.revision;
  for (const stanza of state.lines) {
    for (const ls of stanza) ls.findings = [];
  }
  state.poemFindings = [];
  for (const finding of report.findings) {
    const loc = finding.location ?? {};
    const s = loc["stanza"];
    const l = loc["line"];
    if (
      typeof s === "number" &&
      typeof l === "number" &&
      state.lines[s - 1]?.[l - 1] !== undefined
    ) {
      state.lines[s - 1][l - 1].findings.push(finding);
    } else {
      state.poemFindings.push(finding);
    }
  }
}

export function allFindings(state: ComposerState): Finding[] {
  const out: Finding[] = [...state.poemFindings];
  for (const stanza of state.lines) {
    for (const ls of stanza) out.push(...ls.findings);
  }
  return out;
}

/** Pair-coverage meter: covered pairs out of u(u-1)/2. */
export function coverage(state: ComposerState): { covered: number; total: number } {
  const u = state.session?.keywords.length ?? 0;
  const total = (u * (u - 1)) / 2;
  if (state.verdict === null) return { covered: 0, total };
  const uncovered = allFindings(state).filter(
    (f) => f.rule === "pair-uncovered",
  ).length;
  return { covered: total - uncovered, total };
}

/** Every valid order-7 system is a Fano plane, so the badge needs only the
 * server's verdict plus the order. */
export function showFanoBadge(state: ComposerState): boolean {
  return state.verdict === "pass" && state.session?.keywords.length === 7;
}
