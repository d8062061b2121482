// ./pkg is generated; see crates/wasm/build.sh
import init, { builtinNames, builtinSource, solve, analyze, explainProfile } from "./pkg/hog_wasm.js";

const $ = (id) => document.getElementById(id);

function show(run) {
  const out = $("output");
  try {
    out.textContent = run();
    out.className = "";
  } catch (err) {
    out.textContent = String(err);
    out.className = "error";
  }
}

function load(name) {
  $("source").value = builtinSource(name);
  $("output").textContent = "";
}

await init();

for (const name of builtinNames()) {
  const opt = document.createElement("option");
  opt.value = opt.textContent = name;
  $("builtin").append(opt);
}
$("builtin").value = "voting-keynes";
load("voting-keynes");

$("builtin").addEventListener("change", (e) => load(e.target.value));
$("solve").addEventListener("click", () =>
  show(() => solve($("source").value, $("json").checked, $("concept").value)));
$("analyze").addEventListener("click", () => show(() => analyze($("source").value)));
$("explain").addEventListener("click", () =>
  show(() => explainProfile($("source").value, $("profile").value)));
