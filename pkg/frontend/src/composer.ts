// The composer app: keyword entry, stanza panels with live per-line
// feedback, the decomposition graph, and exports. All validation verdicts
// come from the service; the client only pre-checks the keyword count
// before creating a session.

import {
  admissibilityMessage,
  duplicateKeywords,
  parseKeywords,
} from "./admissibility.js";
import { ApiClient, ApiError } from "./api.js";
import { triangleColor, trianglePath, vertexPositions } from "./layout.js";
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
} from "./state.js";

export interface ComposerOptions {
  debounceMs?: number;
  download?: (filename: string, text: string, mime: string) => void;
}

const SVG_NS = "http://www.w3.org/2000/svg";
const VARIANTS = ["pure", "relaxed", "resolvable-pure", "resolvable-relaxed"];
const EXPORTS: Array<"poem" | "dot" | "tikz" | "json"> = [
  "poem",
  "dot",
  "tikz",
  "json",
];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function messageOf(err: unknown): string {
  if (err instanceof ApiError) return err.message;
  if (err instanceof Error) return `could not reach the service: ${err.message}`;
  return String(err);
}

function browserDownload(filename: string, text: string, mime: string): void {
  if (typeof URL.createObjectURL !== "function") return;
  const url = URL.createObjectURL(new Blob([text], { type: mime }));
  const anchor = el("a", { href: url, download: filename });
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}

interface PendingTimer {
  handle: ReturnType<typeof setTimeout>;
  fire: () => void;
}

export class Composer {
  readonly state: ComposerState = emptyState();
  private readonly debounceMs: number;
  private readonly download: (f: string, t: string, m: string) => void;
  private readonly timers = new Map<string, PendingTimer>();
  private readonly inflight = new Set<Promise<void>>();

  constructor(
    readonly root: HTMLElement,
    readonly api: ApiClient,
    options: ComposerOptions = {},
  ) {
    this.debounceMs = options.debounceMs ?? 350;
    this.download = options.download ?? browserDownload;
    this.buildShell();
  }

  // ---- session creation ------------------------------------------------

  async create(keywordText: string, variant: string): Promise<boolean> {
    const errorBox = this.q("#keyword-error");
    errorBox.textContent = "";
    const words = parseKeywords(keywordText);
    const message = admissibilityMessage(words.length);
    if (message !== null) {
      errorBox.textContent = message;
      return false;
    }
    const dups = duplicateKeywords(words);
    if (dups.length > 0) {
      errorBox.textContent = `duplicate keyword(s): ${dups.join(", ")}`;
      return false;
    }
    try {
      const doc = await this.api.createSession(words, variant);
      loadSession(this.state, doc);
      this.buildSession();
      await this.validate();
      return true;
    } catch (err) {
      errorBox.textContent = messageOf(err);
      return false;
    }
  }

  async validate(): Promise<void> {
    if (!this.state.session) return;
    try {
      const report = await this.api.validate(this.state.session.id);
      applyValidation(this.state, report);
    } catch (err) {
      this.state.banner = messageOf(err);
    }
    this.renderFeedback();
  }

  // ---- line editing with the staleness guard ---------------------------

  private onInput(stanza: number, line: number, value: string): void {
    beginEdit(this.state, stanza, line, value);
    this.scheduleSend(stanza, line);
  }

  private scheduleSend(stanza: number, line: number): void {
    const key = `${stanza}:${line}`;
    const existing = this.timers.get(key);
    if (existing) clearTimeout(existing.handle);
    const fire = () => {
      this.timers.delete(key);
      this.send(stanza, line);
    };
    if (this.debounceMs <= 0) {
      this.timers.delete(key);
      fire();
      return;
    }
    this.timers.set(key, { handle: setTimeout(fire, this.debounceMs), fire });
  }

  private send(stanza: number, line: number): void {
    const session = this.state.session;
    if (!session) return;
    const ls = lineAt(this.state, stanza, line);
    if (ls.pending) {
      // one request in flight per line; the newest text goes out after it
      ls.queued = true;
      return;
    }
    ls.pending = true;
    const generation = ls.generation;
    const promise: Promise<void> = this.api
      .updateLine(session.id, stanza, line, ls.text)
      .then((resp) => {
        if (applyUpdate(this.state, stanza, line, generation, resp)) {
          this.renderFeedback();
        }
      })
      .catch((err) => {
        applyFailure(this.state, stanza, line, messageOf(err));
        this.renderFeedback();
      })
      .finally(() => {
        this.inflight.delete(promise);
        const again = lineAt(this.state, stanza, line);
        if (again.queued) {
          again.queued = false;
          this.send(stanza, line);
        }
      });
    this.inflight.add(promise);
  }

  /** Type into a line programmatically (used by tests and by moveLine). */
  setLine(stanza: number, line: number, text: string): void {
    const input = this.lineInput(stanza, line);
    input.value = text;
    input.dispatchEvent(new Event("input"));
  }

  /** Swap a line with its neighbor and re-validate both slots. */
  moveLine(stanza: number, line: number, direction: -1 | 1): void {
    const neighbor = line + direction;
    if (!this.state.session) return;
    if (neighbor < 1 || neighbor > this.state.lines[stanza - 1].length) return;
    const a = lineAt(this.state, stanza, line).text;
    const b = lineAt(this.state, stanza, neighbor).text;
    this.setLine(stanza, line, b);
    this.setLine(stanza, neighbor, a);
  }

  focusLine(stanza: number, line: number): void {
    this.state.focused = { stanza, line };
    this.renderGraph();
  }

  /** Resolve once every scheduled and in-flight request has settled. */
  async flush(): Promise<void> {
    while (this.timers.size > 0 || this.inflight.size > 0) {
      for (const [key, timer] of [...this.timers]) {
        clearTimeout(timer.handle);
        this.timers.delete(key);
        timer.fire();
      }
      await Promise.all([...this.inflight]);
    }
  }

  // ---- exports ---------------------------------------------------------

  async exportAs(format: "poem" | "dot" | "tikz" | "json"): Promise<string> {
    const session = this.state.session;
    if (!session) return "";
    let text: string;
    let extension = format === "poem" ? "poem" : format;
    try {
      if (format === "json") {
        text = JSON.stringify(await this.api.exportBundle(session.id), null, 2);
      } else {
        text = await this.api.exportText(session.id, format);
      }
    } catch (err) {
      this.state.banner = messageOf(err);
      this.renderFeedback();
      return "";
    }
    this.q("#export-preview").textContent = text;
    const mime = format === "json" ? "application/json" : "text/plain";
    this.download(`composition-${session.id}.${extension}`, text, mime);
    return text;
  }

  // ---- rendering -------------------------------------------------------

  private q(selector: string): HTMLElement {
    const node = this.root.querySelector(selector);
    if (!node) throw new Error(`missing element ${selector}`);
    return node as HTMLElement;
  }

  private lineInput(stanza: number, line: number): HTMLInputElement {
    return this.q(
      `.line-input[data-stanza="${stanza}"][data-line="${line}"]`,
    ) as HTMLInputElement;
  }

  private buildShell(): void {
    this.root.innerHTML = "";
    const form = el("div", { id: "keyword-form" });
    form.appendChild(el("label", { for: "keywords" }, "Keywords (comma-separated)"));
    form.appendChild(
      el("textarea", { id: "keywords", rows: "2", placeholder: "one, two, three" }),
    );
    const variantSelect = el("select", { id: "variant" });
    for (const v of VARIANTS) variantSelect.appendChild(el("option", { value: v }, v));
    form.appendChild(variantSelect);
    const createButton = el("button", { id: "create" }, "Start composing");
    createButton.addEventListener("click", () => {
      void this.create(
        (this.q("#keywords") as HTMLTextAreaElement).value,
        (this.q("#variant") as HTMLSelectElement).value,
      );
    });
    form.appendChild(createButton);
    form.appendChild(el("div", { id: "keyword-error", class: "error" }));
    this.root.appendChild(form);
    this.root.appendChild(el("div", { id: "session", hidden: "" }));
  }

  private buildSession(): void {
    const session = this.state.session!;
    const panel = this.q("#session");
    panel.innerHTML = "";
    panel.removeAttribute("hidden");

    const bar = el("div", { id: "verdict-bar" });
    bar.appendChild(el("span", { id: "verdict" }, "…"));
    bar.appendChild(el("span", { id: "fano-badge", hidden: "" }, "Fano plane"));
    bar.appendChild(el("span", { id: "coverage" }));
    bar.appendChild(el("span", { id: "revision" }));
    panel.appendChild(bar);
    panel.appendChild(el("div", { id: "banner", class: "error", hidden: "" }));

    const stanzas = el("div", { id: "stanzas" });
    session.draft.forEach((stanzaLines, si) => {
      const box = el("div", { class: "stanza", "data-stanza": String(si + 1) });
      const title = session.variant.startsWith("resolvable")
        ? `Stanza ${si + 1} (parallel class)`
        : `Stanza ${si + 1}`;
      box.appendChild(el("h3", {}, title));
      stanzaLines.forEach((text, li) => {
        box.appendChild(this.buildLineRow(si + 1, li + 1, text));
      });
      stanzas.appendChild(box);
    });
    panel.appendChild(stanzas);

    panel.appendChild(el("div", { id: "poem-findings" }));

    const exports = el("div", { id: "exports" });
    for (const format of EXPORTS) {
      const button = el("button", { id: `export-${format}` }, `Export ${format}`);
      button.addEventListener("click", () => void this.exportAs(format));
      exports.appendChild(button);
    }
    panel.appendChild(exports);
    panel.appendChild(el("pre", { id: "export-preview" }));

    const graphBox = el("div", { id: "graph" });
    panel.appendChild(graphBox);
    this.renderGraph();
    this.renderFeedback();
  }

  private buildLineRow(stanza: number, line: number, text: string): HTMLElement {
    const row = el("div", {
      class: "line-row",
      "data-stanza": String(stanza),
      "data-line": String(line),
    });
    const input = el("input", {
      class: "line-input",
      type: "text",
      "data-stanza": String(stanza),
      "data-line": String(line),
    }) as HTMLInputElement;
    input.value = text;
    input.addEventListener("input", () => this.onInput(stanza, line, input.value));
    input.addEventListener("focus", () => this.focusLine(stanza, line));
    row.appendChild(input);
    const up = el("button", { class: "move-up", title: "move up" }, "↑");
    up.addEventListener("click", () => this.moveLine(stanza, line, -1));
    const down = el("button", { class: "move-down", title: "move down" }, "↓");
    down.addEventListener("click", () => this.moveLine(stanza, line, 1));
    row.appendChild(up);
    row.appendChild(down);
    row.appendChild(
      el("div", {
        class: "line-findings",
        "data-stanza": String(stanza),
        "data-line": String(line),
      }),
    );
    return row;
  }

  renderFeedback(): void {
    if (!this.state.session) return;
    const verdict = this.q("#verdict");
    verdict.textContent = this.state.verdict ?? "…";
    verdict.className = this.state.verdict ?? "unknown";

    const badge = this.q("#fano-badge");
    if (showFanoBadge(this.state)) badge.removeAttribute("hidden");
    else badge.setAttribute("hidden", "");

    const cov = coverage(this.state);
    this.q("#coverage").textContent = `${cov.covered}/${cov.total} pairs covered`;
    this.q("#revision").textContent = `rev ${this.state.revision}`;

    const banner = this.q("#banner");
    if (this.state.banner) {
      banner.textContent = this.state.banner;
      banner.removeAttribute("hidden");
    } else {
      banner.setAttribute("hidden", "");
    }

    this.state.lines.forEach((stanzaLines, si) => {
      stanzaLines.forEach((ls, li) => {
        const box = this.q(
          `.line-findings[data-stanza="${si + 1}"][data-line="${li + 1}"]`,
        );
        box.innerHTML = "";
        for (const finding of ls.findings) {
          box.appendChild(
            el("div", { class: `finding ${finding.severity}` }, finding.message),
          );
        }
      });
    });

    const global = this.q("#poem-findings");
    global.innerHTML = "";
    for (const finding of this.state.poemFindings) {
      global.appendChild(
        el(
          "div",
          { class: `finding ${finding.severity}` },
          `${finding.rule}: ${finding.message}`,
        ),
      );
    }
  }

  /** Which design triangle a line slot realizes (classes for resolvable). */
  private triangleIndexFor(stanza: number, line: number): number {
    const system = this.state.session!.system;
    if (system.classes && system.classes[stanza - 1]) {
      return system.classes[stanza - 1][line - 1] ?? 0;
    }
    let index = line - 1;
    for (let s = 0; s < stanza - 1; s++) index += this.state.lines[s].length;
    return index;
  }

  renderGraph(): void {
    const session = this.state.session;
    if (!session) return;
    const box = this.q("#graph");
    box.innerHTML = "";
    const size = 360;
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
    svg.setAttribute("width", String(size));
    svg.setAttribute("height", String(size));

    const vertices = vertexPositions(
      session.system.order,
      size / 2,
      size / 2,
      size / 2 - 40,
    );
    const focusedIndex = this.state.focused
      ? this.triangleIndexFor(this.state.focused.stanza, this.state.focused.line)
      : -1;

    session.system.triples.forEach((triple, i) => {
      const path = document.createElementNS(SVG_NS, "path");
      path.setAttribute("d", trianglePath(triple, vertices));
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", triangleColor(i));
      path.setAttribute("stroke-width", i === focusedIndex ? "5" : "1.5");
      path.setAttribute("data-triangle", String(i));
      if (i === focusedIndex) path.setAttribute("class", "focused");
      svg.appendChild(path);
    });

    vertices.forEach((v, i) => {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", v.x.toFixed(2));
      circle.setAttribute("cy", v.y.toFixed(2));
      circle.setAttribute("r", "14");
      circle.setAttribute("class", "vertex");
      svg.appendChild(circle);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", v.x.toFixed(2));
      label.setAttribute("y", (v.y + 4).toFixed(2));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "vertex-label");
      label.textContent = session.keywords[i];
      svg.appendChild(label);
    });
    box.appendChild(svg);
  }
}

export function createComposer(
  root: HTMLElement,
  api: ApiClient,
  options: ComposerOptions = {},
): Composer {
  return new Composer(root, api, options);
}
