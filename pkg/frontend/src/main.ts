import { EditorApi } from "./api.js";
import { EditorStore } from "./state.js";
import { initEditor } from "./ui.js";

const params = new URLSearchParams(window.location.search);
const endpoint = params.get("endpoint") ?? "http://127.0.0.1:8000";

const store = new EditorStore(new EditorApi(endpoint));
const root = document.getElementById("editor");
if (root) {
  initEditor(store, root);
  store.loadSchema().catch((err) => {
    root.textContent = "could not load schema from " + endpoint + ": " + err.message;
  });
}
