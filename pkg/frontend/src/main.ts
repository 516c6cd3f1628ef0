/** Browser entry point: mounts the workbench against the service at
 * ?api=<base-url> (default http://127.0.0.1:8000).
 */

import { ApiClient } from "./api.js";
import { mountApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const baseUrl =
    new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";
  mountApp(root, new ApiClient({ baseUrl }));
}
