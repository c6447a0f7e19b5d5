// Typed client for the editing service. Every method maps to one endpoint;
// the client holds no state beyond the base URL.

export interface TagInfo {
  name: string;
  attributes: string[];
  conditions: string[];
}

export interface SchemaInfo {
  fingerprint: string;
  image_size: number;
  style_dim: number;
  tags: TagInfo[];
}

export interface StylePayload {
  schema_fingerprint: string;
  tag: string;
  vector: number[];
}

export interface EditRequest {
  tag: string;
  mode: "latent" | "reference" | "style";
  attribute?: string;
  seed?: number;
  reference?: string;
  style?: StylePayload;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

async function parseJson(res: Response): Promise<any> {
  const body = await res.json();
  if (!res.ok) {
    const err = body as ApiErrorBody;
    throw new ApiError(res.status, err.code ?? "unknown", err.message ?? res.statusText);
  }
  return body;
}

export class EditorApi {
  constructor(public baseUrl: string, private fetchFn: typeof fetch = fetch) {}

  private async post(path: string, body: unknown): Promise<any> {
    const res = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseJson(res);
  }

  async schema(): Promise<SchemaInfo> {
    const res = await this.fetchFn(this.baseUrl + "/schema");
    return parseJson(res);
  }

  async openSession(imageB64: string): Promise<{ session_id: string; preview: string }> {
    return this.post("/session", { image: imageB64 });
  }

  async sessionState(id: string): Promise<{ session_id: string; edits: EditRequest[]; preview: string }> {
    const res = await this.fetchFn(`${this.baseUrl}/session/${id}`);
    return parseJson(res);
  }

  async applyEdit(id: string, edit: EditRequest): Promise<{ preview: string; edit_index: number }> {
    return this.post(`/session/${id}/apply`, edit);
  }

  async rebase(id: string, edits: EditRequest[]): Promise<{ preview: string; edit_count: number }> {
    return this.post(`/session/${id}/rebase`, { edits });
  }

  async extract(imageB64: string, tag: string): Promise<StylePayload> {
    const body = await this.post("/extract", { image: imageB64, tag });
    return body.style;
  }

  async interpolate(a: StylePayload, b: StylePayload, t: number): Promise<StylePayload> {
    const body = await this.post("/interpolate", { style_a: a, style_b: b, t });
    return body.style;
  }
}
