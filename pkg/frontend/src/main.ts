// Entry point: ?mock=1 runs against the recorded snapshot, otherwise the
// service at ?api=<url> (default http://127.0.0.1:8000).

import { App } from "./app.js";
import { HttpApiClient, type ApiClient } from "./api.js";
import { MockApiClient } from "./mock/client.js";

const params = new URLSearchParams(window.location.search);
const client: ApiClient = params.get("mock")
  ? new MockApiClient()
  : new HttpApiClient(params.get("api") ?? "http://127.0.0.1:8000");

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");
new App(client, root).mount();
