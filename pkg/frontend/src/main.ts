import { ApiClient } from "./api.js";
import { createComposer } from "./composer.js";

const params = new URLSearchParams(window.location.search);
const base = params.get("api") ?? "http://127.0.0.1:8075";

const root = document.getElementById("app");
if (root) {
  createComposer(root, new ApiClient(base));
}
