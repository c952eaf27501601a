// Typed client for the composer service. Every call goes through fetch;
// non-2xx responses carry { "error": message } and become ApiError.

export interface Finding {
  rule: string;
  severity: "error" | "warning";
  message: string;
  location?: Record<string, unknown>;
}

export interface SystemDoc {
  order: number;
  points: string[];
  triples: number[][];
  classes?: number[][];
}

export interface SessionDoc {
  id: string;
  keywords: string[];
  variant: string;
  rules: string[];
  seed: number;
  revision: number;
  created_at: string;
  updated_at: string;
  draft: string[][];
  system: SystemDoc;
}

export interface UpdateResponse {
  revision: number;
  verdict: "pass" | "fail";
  line: { stanza: number; line: number; findings: Finding[] };
  poem: { findings: Finding[] };
}

export interface ReportDoc {
  verdict: "pass" | "fail";
  findings: Finding[];
  derived_system: { order: number; points: string[]; triples: number[][] };
  revision?: number;
}

export interface ExportBundle {
  poem: string;
  report: ReportDoc;
  graph: SystemDoc & { colors: string[] };
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function readError(resp: Response): Promise<never> {
  let message = `${resp.status} ${resp.statusText}`;
  try {
    const body = (await resp.json()) as { error?: string };
    if (body && typeof body.error === "string") message = body.error;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(resp.status, message);
}

export class ApiClient {
  constructor(readonly base: string) {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!resp.ok) await readError(resp);
    return (await resp.json()) as T;
  }

  createSession(
    keywords: string[],
    variant: string,
    rules: string[] = [],
  ): Promise<SessionDoc> {
    return this.json("/sessions", {
      method: "POST",
      body: JSON.stringify({ keywords, variant, rules }),
    });
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.json(`/sessions/${id}`);
  }

  updateLine(
    id: string,
    stanza: number,
    line: number,
    text: string,
  ): Promise<UpdateResponse> {
    return this.json(`/sessions/${id}/lines/${stanza}/${line}`, {
      method: "PUT",
      body: JSON.stringify({ text }),
    });
  }

  validate(id: string): Promise<ReportDoc> {
    return this.json(`/sessions/${id}/validate`, { method: "POST" });
  }

  async exportText(id: string, format: "poem" | "dot" | "tikz"): Promise<string> {
    const resp = await fetch(
      `${this.base}/sessions/${id}/export?format=${format}`,
    );
    if (!resp.ok) await readError(resp);
    return resp.text();
  }

  exportBundle(id: string): Promise<ExportBundle> {
    return this.json(`/sessions/${id}/export?format=json`);
  }
}
