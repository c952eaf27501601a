import { beforeEach, describe, expect, it } from "vitest";

import type { SessionDoc, UpdateResponse } from "../src/api.js";
import {
  ComposerState,
  applyFailure,
  applyUpdate,
  applyValidation,
  beginEdit,
  coverage,
  emptyState,
  lineAt,
  loadSession,
  showFanoBadge,
} from "../src/state.js";

const SESSION: SessionDoc = {
  id: "s1",
  keywords: ["a", "b", "c", "d", "e", "f", "g"],
  variant: "pure",
  rules: [],
  seed: 0,
  revision: 0,
  created_at: "",
  updated_at: "",
  draft: [["a b c", "a d e", "a f g", "b d f", "b e g", "c d g", "c e f"]],
  system: {
    order: 7,
    points: ["a", "b", "c", "d", "e", "f", "g"],
    triples: [],
  },
};

function response(
  verdict: "pass" | "fail",
  revision: number,
  lineFindings = 0,
): UpdateResponse {
  const findings = Array.from({ length: lineFindings }, (_, i) => ({
    rule: "line-keyword-count",
    severity: "error" as const,
    message: `finding ${i}`,
    location: { stanza: 1, line: 1 },
  }));
  return {
    revision,
    verdict,
    line: { stanza: 1, line: 1, findings },
    poem: { findings: [] },
  };
}

describe("staleness guard", () => {
  let state: ComposerState;

  beforeEach(() => {
    state = emptyState();
    loadSession(state, SESSION);
  });

  it("applies a response that answers the current generation", () => {
    const generation = beginEdit(state, 1, 1, "draft one");
    expect(applyUpdate(state, 1, 1, generation, response("fail", 1, 2))).toBe(true);
    expect(lineAt(state, 1, 1).findings).toHaveLength(2);
    expect(state.verdict).toBe("fail");
    expect(state.revision).toBe(1);
  });

  it("discards a response for a superseded buffer", () => {
    const stale = beginEdit(state, 1, 1, "draft one");
    beginEdit(state, 1, 1, "draft two");
    expect(applyUpdate(state, 1, 1, stale, response("fail", 1, 3))).toBe(false);
    // nothing from the stale response may leak into the state
    expect(lineAt(state, 1, 1).findings).toHaveLength(0);
    expect(state.verdict).toBeNull();
    expect(state.revision).toBe(0);
    expect(lineAt(state, 1, 1).text).toBe("draft two");
  });

  it("still applies the eventual response for the latest generation", () => {
    const stale = beginEdit(state, 1, 1, "draft one");
    const fresh = beginEdit(state, 1, 1, "draft two");
    applyUpdate(state, 1, 1, stale, response("fail", 1, 3));
    expect(applyUpdate(state, 1, 1, fresh, response("pass", 2))).toBe(true);
    expect(state.verdict).toBe("pass");
    expect(lineAt(state, 1, 1).findings).toHaveLength(0);
  });

  it("marks a line queued when edited while a request is in flight", () => {
    beginEdit(state, 1, 1, "draft one");
    lineAt(state, 1, 1).pending = true;
    beginEdit(state, 1, 1, "draft two");
    expect(lineAt(state, 1, 1).queued).toBe(true);
  });
});

describe("failure handling", () => {
  it("keeps the buffer and raises the banner", () => {
    const state = emptyState();
    loadSession(state, SESSION);
    beginEdit(state, 1, 1, "my words");
    applyFailure(state, 1, 1, "could not reach the service: refused");
    expect(lineAt(state, 1, 1).text).toBe("my words");
    expect(state.banner).toContain("could not reach");
    expect(lineAt(state, 1, 1).pending).toBe(false);
  });
});

describe("validation reports", () => {
  it("routes findings to their lines or the poem panel", () => {
    const state = emptyState();
    loadSession(state, SESSION);
    applyValidation(state, {
      verdict: "fail",
      findings: [
        {
          rule: "line-keyword-count",
          severity: "error",
          message: "needs 3",
          location: { stanza: 1, line: 2 },
        },
        {
          rule: "pair-uncovered",
          severity: "error",
          message: "a and b never share a line",
          location: { pair: ["a", "b"] },
        },
      ],
      derived_system: { order: 7, points: [], triples: [] },
    });
    expect(lineAt(state, 1, 2).findings).toHaveLength(1);
    expect(state.poemFindings).toHaveLength(1);
    expect(state.verdict).toBe("fail");
  });
});

describe("derived display state", () => {
  it("computes the coverage meter from pair findings", () => {
    const state = emptyState();
    loadSession(state, SESSION);
    expect(coverage(state)).toEqual({ covered: 0, total: 21 });
    applyValidation(state, {
      verdict: "fail",
      findings: [
        {
          rule: "pair-uncovered",
          severity: "error",
          message: "x",
          location: { pair: ["a", "b"] },
        },
        {
          rule: "pair-uncovered",
          severity: "error",
          message: "y",
          location: { pair: ["c", "d"] },
        },
      ],
      derived_system: { order: 7, points: [], triples: [] },
    });
    expect(coverage(state)).toEqual({ covered: 19, total: 21 });
  });

  it("shows the Fano badge only for passing order-7 sessions", () => {
    const state = emptyState();
    loadSession(state, SESSION);
    expect(showFanoBadge(state)).toBe(false);
    state.verdict = "pass";
    expect(showFanoBadge(state)).toBe(true);
    state.session!.keywords = ["a", "b", "c"];
    expect(showFanoBadge(state)).toBe(false);
  });
});
