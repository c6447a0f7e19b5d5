// Editor state store. The edit stack mirrors the server session exactly and
// every preview byte comes from a server response; the client never renders
// imagery locally, so parity with the CLI is inherited from the service.

import { EditorApi, EditRequest, SchemaInfo, StylePayload } from "./api.js";

export interface ClipboardEntry {
  name: string;
  style: StylePayload;
}

export interface Thumbnail {
  seed: number;
  edit: EditRequest;
  preview: string;
}

export interface EditorState {
  schema: SchemaInfo | null;
  sessionId: string | null;
  sourceImage: string | null;
  stack: EditRequest[];
  preview: string | null;
  clipboard: ClipboardEntry[];
}

type Listener = (state: EditorState) => void;

export class EditorStore {
  state: EditorState = {
    schema: null,
    sessionId: null,
    sourceImage: null,
    stack: [],
    preview: null,
    clipboard: [],
  };
  private listeners: Listener[] = [];

  constructor(private api: EditorApi) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  async loadSchema(): Promise<SchemaInfo> {
    const schema = await this.api.schema();
    this.state.schema = schema;
    this.emit();
    return schema;
  }

  async open(imageB64: string): Promise<void> {
    const res = await this.api.openSession(imageB64);
    this.state.sessionId = res.session_id;
    this.state.sourceImage = imageB64;
    this.state.stack = [];
    this.state.preview = res.preview;
    this.emit();
  }

  private requireSession(): string {
    if (!this.state.sessionId) throw new Error("no open session");
    return this.state.sessionId;
  }

  // Preview a candidate edit without touching the main session: a scratch
  // session replays the current stack plus the candidate from the source.
  private async scratchPreview(edits: EditRequest[]): Promise<string> {
    if (!this.state.sourceImage) throw new Error("no source image");
    const scratch = await this.api.openSession(this.state.sourceImage);
    const res = await this.api.rebase(scratch.session_id, edits);
    return res.preview;
  }

  async sampleGrid(tag: string, attribute: string, n: number, baseSeed = 0): Promise<Thumbnail[]> {
    this.requireSession();
    const thumbs: Thumbnail[] = [];
    for (let i = 0; i < n; i++) {
      const seed = baseSeed + i;
      const edit: EditRequest = { tag, mode: "latent", attribute, seed };
      const preview = await this.scratchPreview([...this.withoutTag(tag), edit]);
      thumbs.push({ seed, edit, preview });
    }
    return thumbs;
  }

  private withoutTag(tag: string): EditRequest[] {
    return this.state.stack.filter((e) => e.tag !== tag);
  }

  async commit(edit: EditRequest): Promise<void> {
    const id = this.requireSession();
    if (this.state.stack.some((e) => e.tag === edit.tag)) {
      // replacing an edit on the same tag is a rebase, not an append
      const edits = [...this.withoutTag(edit.tag), edit];
      const res = await this.api.rebase(id, edits);
      this.state.stack = edits;
      this.state.preview = res.preview;
    } else {
      const res = await this.api.applyEdit(id, edit);
      this.state.stack = [...this.state.stack, edit];
      this.state.preview = res.preview;
    }
    this.emit();
  }

  async extractToClipboard(imageB64: string, tag: string, name: string): Promise<ClipboardEntry> {
    const style = await this.api.extract(imageB64, tag);
    const entry = { name, style };
    this.state.clipboard = [...this.state.clipboard, entry];
    this.emit();
    return entry;
  }

  async previewInterpolation(a: StylePayload, b: StylePayload, t: number): Promise<string> {
    if (a.tag !== b.tag) throw new Error("styles belong to different tags");
    const style = await this.api.interpolate(a, b, t);
    const edit: EditRequest = { tag: style.tag, mode: "style", style };
    return this.scratchPreview([...this.withoutTag(style.tag), edit]);
  }

  async removeEdit(index: number): Promise<void> {
    const edits = this.state.stack.filter((_, i) => i !== index);
    await this.setStack(edits);
  }

  async moveEdit(from: number, to: number): Promise<void> {
    const edits = [...this.state.stack];
    const [moved] = edits.splice(from, 1);
    edits.splice(to, 0, moved);
    await this.setStack(edits);
  }

  async setStack(edits: EditRequest[]): Promise<void> {
    const id = this.requireSession();
    const res = await this.api.rebase(id, edits);
    this.state.stack = edits;
    this.state.preview = res.preview;
    this.emit();
  }

  exportStack(): string {
    return JSON.stringify(this.state.stack, null, 2);
  }
}

// Serializes slider requests: at most one in flight, the latest pending
// value wins, stale responses never overwrite newer ones.
export class DebouncedSlider {
  private inFlight = false;
  private pending: number | null = null;

  constructor(private run: (t: number) => Promise<void>) {}

  async set(t: number): Promise<void> {
    if (this.inFlight) {
      this.pending = t;
      return;
    }
    this.inFlight = true;
    try {
      await this.run(t);
    } finally {
      this.inFlight = false;
    }
    if (this.pending !== null) {
      const next = this.pending;
      this.pending = null;
      await this.set(next);
    }
  }

  get busy(): boolean {
    return this.inFlight;
  }
}
