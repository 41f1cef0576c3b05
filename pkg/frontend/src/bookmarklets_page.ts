import { fetchMatrix, renderMatrix } from "./bookmarklets.js";

const root = document.getElementById("matrix");
if (root) {
  fetchMatrix()
    .then((entries) => renderMatrix(root, entries))
    .catch((err) => {
      root.textContent = `Could not load the bookmarklet matrix: ${err}`;
    });
}
