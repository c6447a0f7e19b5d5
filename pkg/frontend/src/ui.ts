// DOM wiring. All tag and attribute controls are generated from the schema
// fetched at startup; nothing here names a specific tag.

import { EditRequest, StylePayload } from "./api.js";
import { DebouncedSlider, EditorStore } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

function previewImg(b64: string): string {
  return "data:image/png;base64," + b64;
}

export function initEditor(store: EditorStore, root: HTMLElement): void {
  const preview = el("img", { id: "preview", alt: "preview" });
  const tagSelect = el("select", { id: "tag-select" });
  const attrSelect = el("select", { id: "attr-select" });
  const grid = el("div", { id: "sample-grid" });
  const stackList = el("ol", { id: "edit-stack" });
  const clipboardList = el("ul", { id: "clipboard" });
  const slider = el("input", { id: "interp-slider", type: "range", min: "0", max: "1", step: "0.125" });
  const status = el("div", { id: "status" });

  const upload = el("input", { id: "upload", type: "file", accept: "image/png" });
  upload.addEventListener("change", async () => {
    const file = upload.files?.[0];
    if (!file) return;
    const bytes = new Uint8Array(await file.arrayBuffer());
    let bin = "";
    for (const b of bytes) bin += String.fromCharCode(b);
    try {
      await store.open(btoa(bin));
      status.textContent = "session opened";
    } catch (err: any) {
      status.textContent = "upload failed: " + err.message;
    }
  });

  const sampleBtn = el("button", { id: "sample-btn" }, "Sample 5 styles");
  sampleBtn.addEventListener("click", async () => {
    const tag = tagSelect.value;
    const attr = attrSelect.value;
    grid.replaceChildren();
    const thumbs = await store.sampleGrid(tag, attr, 5, Date.now() % 100000);
    for (const t of thumbs) {
      const img = el("img", { class: "thumb", title: `seed ${t.seed}` });
      img.src = previewImg(t.preview);
      img.addEventListener("click", () => store.commit(t.edit));
      grid.appendChild(img);
    }
  });

  const refInput = el("input", { id: "ref-upload", type: "file", accept: "image/png" });
  const extractBtn = el("button", { id: "extract-btn" }, "Extract style from reference");
  extractBtn.addEventListener("click", async () => {
    const file = refInput.files?.[0];
    if (!file) return;
    const bytes = new Uint8Array(await file.arrayBuffer());
    let bin = "";
    for (const b of bytes) bin += String.fromCharCode(b);
    const tag = tagSelect.value;
    await store.extractToClipboard(btoa(bin), tag, `${tag} from ${file.name}`);
  });

  let interpPair: [StylePayload, StylePayload] | null = null;
  const interp = new DebouncedSlider(async (t) => {
    if (!interpPair) return;
    const b64 = await store.previewInterpolation(interpPair[0], interpPair[1], t);
    preview.src = previewImg(b64);
  });
  slider.addEventListener("input", () => {
    void interp.set(parseFloat(slider.value));
  });

  const exportBtn = el("button", { id: "export-btn" }, "Export image");
  exportBtn.addEventListener("click", () => {
    if (!store.state.preview) return;
    const a = el("a", { download: "edited.png", href: previewImg(store.state.preview) });
    a.click();
  });

  store.subscribe((state) => {
    if (state.preview) preview.src = previewImg(state.preview);

    if (state.schema && tagSelect.childElementCount === 0) {
      for (const t of state.schema.tags) {
        tagSelect.appendChild(el("option", { value: t.name }, t.name));
      }
      tagSelect.dispatchEvent(new Event("change"));
    }

    stackList.replaceChildren();
    state.stack.forEach((edit, i) => {
      const item = el("li", {}, describeEdit(edit));
      const up = el("button", { class: "move-up" }, "up");
      up.disabled = i === 0;
      up.addEventListener("click", () => store.moveEdit(i, i - 1));
      const rm = el("button", { class: "remove" }, "remove");
      rm.addEventListener("click", () => store.removeEdit(i));
      item.append(" ", up, rm);
      stackList.appendChild(item);
    });

    clipboardList.replaceChildren();
    state.clipboard.forEach((entry) => {
      const item = el("li", {}, `${entry.name} [${entry.style.tag}]`);
      const apply = el("button", {}, "apply");
      // wrong-tag application blocked: only offered when tags match
      apply.disabled = entry.style.tag !== tagSelect.value;
      apply.addEventListener("click", () =>
        store.commit({ tag: entry.style.tag, mode: "style", style: entry.style })
      );
      const asA = el("button", {}, "interp A");
      const asB = el("button", {}, "interp B");
      asA.addEventListener("click", () => {
        interpPair = [entry.style, interpPair?.[1] ?? entry.style];
      });
      asB.addEventListener("click", () => {
        interpPair = [interpPair?.[0] ?? entry.style, entry.style];
      });
      item.append(" ", apply, asA, asB);
      clipboardList.appendChild(item);
    });
  });

  tagSelect.addEventListener("change", () => {
    const schema = store.state.schema;
    if (!schema) return;
    const tag = schema.tags.find((t) => t.name === tagSelect.value);
    attrSelect.replaceChildren();
    for (const a of tag?.attributes ?? []) {
      attrSelect.appendChild(el("option", { value: a }, a));
    }
  });

  root.append(
    upload, preview, tagSelect, attrSelect, sampleBtn, grid,
    refInput, extractBtn, clipboardList, slider, stackList, exportBtn, status
  );
}

export function describeEdit(edit: EditRequest): string {
  if (edit.mode === "latent") return `${edit.tag} -> ${edit.attribute} (seed ${edit.seed})`;
  if (edit.mode === "reference") return `${edit.tag} from reference`;
  return `${edit.tag} from style code`;
}
