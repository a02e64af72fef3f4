import init, { analyze, bound_scan, family_list } from "./pkg/chrombound_web.js";

const $ = (id) => document.getElementById(id);

function fail(el, e) {
  el.innerHTML = `<p class="err">${e}</p>`;
}

// log10 of a decimal string that may exceed f64 precision
function log10(s) {
  if (s.startsWith("-") || s === "0") return null;
  return s.length > 15 ? Math.log10(Number(s.slice(0, 15))) + (s.length - 15) : Math.log10(Number(s));
}

function plot(points) {
  const c = $("plot");
  const ctx = c.getContext("2d");
  ctx.clearRect(0, 0, c.width, c.height);
  const pts = points.map((p) => ({ x: p.x, pi: log10(p.pi), bound: log10(p.bound) }));
  const ys = pts.flatMap((p) => [p.pi, p.bound]).filter((v) => v !== null);
  if (ys.length === 0) return;
  const [ymin, ymax] = [Math.min(...ys), Math.max(...ys, Math.min(...ys) + 1)];
  const xmax = Math.max(1, points[points.length - 1].x);
  const pad = 40;
  const sx = (x) => pad + (x / xmax) * (c.width - 2 * pad);
  const sy = (y) => c.height - pad - ((y - ymin) / (ymax - ymin)) * (c.height - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, c.width - 2 * pad, c.height - 2 * pad);
  ctx.fillStyle = "#555";
  ctx.fillText("x", c.width - pad + 8, c.height - pad);
  ctx.fillText("log10", 4, pad - 8);
  for (const [key, color] of [["bound", "#c33"], ["pi", "#36c"]]) {
    ctx.strokeStyle = color;
    ctx.beginPath();
    let started = false;
    for (const p of pts) {
      if (p[key] === null) { started = false; continue; }
      if (started) ctx.lineTo(sx(p.x), sy(p[key]));
      else ctx.moveTo(sx(p.x), sy(p[key]));
      started = true;
    }
    ctx.stroke();
    ctx.fillStyle = color;
    ctx.fillText(key === "pi" ? "π(G,x)" : "bound", c.width - 2 * pad, key === "pi" ? pad + 16 : pad + 30);
  }
}

function runAnalyze() {
  const out = $("analysis");
  try {
    const a = JSON.parse(analyze($("graph").value, Number($("xmax").value)));
    const rows = a.points
      .map((p) => `<tr><td>${p.x}</td><td>${p.pi}</td><td>${p.bound}</td></tr>`)
      .join("");
    out.innerHTML = `
      <pre>graph6 ${a.graph6}   canonical ${a.canonical}
n = ${a.n}, m = ${a.m}, connected: ${a.connected}
chromatic number ${a.chromatic_number}, clique number ${a.clique_number}, independence number ${a.independence_number}
π(G,x) = ${a.polynomial}${a.factored ? "  =  " + a.factored : ""}
bound    = ${a.bound}
bound hypotheses hold: ${a.bound_hypotheses}; polynomial equals bound: ${a.equals_bound}</pre>
      <table><tr><th>x</th><th>π(G,x)</th><th>bound</th></tr>${rows}</table>`;
    plot(a.points);
  } catch (e) {
    fail(out, e);
  }
}

function runScan() {
  const out = $("scanout");
  out.textContent = "running...";
  setTimeout(() => {
    try {
      const r = JSON.parse(bound_scan(Number($("n").value), Number($("k").value)));
      out.innerHTML = `<p>${r.totals.graphs} graphs, ${r.totals.checks} point checks,
        ${r.violations.length} violations. Equality at: ${r.equality_cases.join(", ") || "none"}</p>`;
    } catch (e) {
      fail(out, e);
    }
  }, 0);
}

await init();
for (const f of JSON.parse(family_list())) {
  const opt = document.createElement("option");
  opt.value = f.spec;
  opt.label = f.description;
  $("families").appendChild(opt);
}
$("analyze").addEventListener("click", runAnalyze);
$("scan").addEventListener("click", runScan);
runAnalyze();
