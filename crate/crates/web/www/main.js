import init, { run_kernel, generate_graph, decompose } from "./pkg/orkernel_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("canvas");
const ctx = canvas.getContext("2d");
const PALETTE = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324"];

let graph = null;

function layout(n) {
  const r = canvas.width * 0.42, cx = canvas.width / 2, cy = canvas.height / 2;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [cx + r * Math.cos(a), cy + r * Math.sin(a)];
  });
}

// fill(v) gives a vertex color or null, ring(v) an outline color or null.
function draw(g, { fill = () => null, ring = () => null, strong = () => false } = {}) {
  graph = g;
  const pos = layout(g.n);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const [u, v] of g.edges) {
    const s = strong(u, v);
    ctx.strokeStyle = s ? "#222" : "#ccc";
    ctx.lineWidth = s ? 3 : 1.5;
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  const rad = Math.max(6, Math.min(18, 400 / Math.max(g.n, 1)));
  ctx.font = `${Math.round(rad * 1.1)}px sans-serif`;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  pos.forEach(([x, y], v) => {
    ctx.fillStyle = fill(v) ?? "#fff";
    ctx.strokeStyle = ring(v) ?? "#333";
    ctx.lineWidth = ring(v) ? 5 : 1.5;
    ctx.beginPath();
    ctx.arc(x, y, rad, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#000";
    if (g.n <= 60) ctx.fillText(String(v), x, y);
  });
}

function show(text, isError = false) {
  $("out").textContent = text;
  $("out").className = isError ? "err" : "";
}

function guard(f) {
  try {
    f();
  } catch (e) {
    show(String(e.message ?? e), true);
  }
}

function regenerate() {
  guard(() => {
    const res = JSON.parse(generate_graph($("family").value, +$("n").value, BigInt($("seed").value), +$("p").value, +$("pk").value));
    $("edges").value = res.edge_list;
    $("queries").textContent = "";
    const planted = new Set(res.planted ?? []);
    const g = JSON.parse(decompose(res.edge_list, "degeneracy")).graph;
    draw(g, { ring: (v) => (planted.has(v) ? "#e6194b" : null) });
    show(res.planted ? `planted clique: ${res.planted.join(" ")}` : "");
  });
}

function selectQuery(res, i, row) {
  for (const el of $("queries").children) el.classList.remove("sel");
  row.classList.add("sel");
  const members = new Set(res.queries[i].vertices);
  draw(res.graph, {
    fill: (v) => (members.has(v) ? "#ffd54f" : null),
    strong: (u, v) => members.has(u) && members.has(v),
  });
}

function runKernel() {
  guard(() => {
    const res = JSON.parse(run_kernel($("edges").value, +$("k").value, $("kernel").value, +$("d").value, +$("c").value));
    const r = res.report;
    const lines = [
      `answer ${r.answer}   verified ${r.verified}`,
      `${r.parameter_name} = ${r.parameter_value}`,
      `queries: ${r.query_count_raw} raw -> ${r.query_count_batched} batched (group size ${r.group_size})`,
      `size bound per query: ${res.size_bound ?? "-"} vertices; largest batched query ${r.max_query_vertices} vertices`,
      `n_G = ${r.n_G}, m_G = ${r.m_G}, encoding size n = ${r.n}`,
    ];
    if (r.immediate_answer) lines.push("answered without queries");
    if (r.direct_solve) lines.push("queries were not smaller than the input, solved directly");
    if (res.queries_truncated) lines.push(`only the first ${res.queries.length} queries are listed`);
    show(lines.join("\n"));
    const list = $("queries");
    list.textContent = "";
    const groupOf = [];
    res.groups.forEach(([first, len], gi) => {
      for (let j = first; j < first + len; j++) groupOf[j] = gi;
    });
    res.queries.forEach((q, i) => {
      const row = document.createElement("div");
      const p = q.provenance;
      const where = Object.entries(p).filter(([key]) => key !== "kind").map(([key, val]) => `${key}=${val}`).join(" ");
      row.textContent = `#${i} [batch ${groupOf[i]}] ${p.kind} ${where}: ${q.vertices.length} vertices`;
      row.onclick = () => selectQuery(res, i, row);
      list.appendChild(row);
    });
    draw(res.graph);
  });
}

function showStructure() {
  guard(() => {
    const res = JSON.parse(decompose($("edges").value, $("view").value));
    const d = res.detail;
    $("queries").textContent = "";
    switch (res.kind) {
      case "degeneracy": {
        const pos = new Map(d.order.map((v, i) => [v, i]));
        const n = Math.max(d.order.length - 1, 1);
        draw(res.graph, { fill: (v) => `hsl(${220 - (200 * pos.get(v)) / n}, 70%, 65%)` });
        show(`degeneracy ${d.degeneracy}\npeeling order: ${d.order.join(" ")}`);
        break;
      }
      case "blocks": {
        const blockOf = new Map();
        d.blocks.forEach((b, i) => b.forEach((v) => blockOf.has(v) || blockOf.set(v, i)));
        const cut = new Set(d.cut_vertices);
        draw(res.graph, {
          fill: (v) => PALETTE[blockOf.get(v) % PALETTE.length],
          ring: (v) => (cut.has(v) ? "#000" : null),
        });
        show(`${d.blocks.length} blocks, cut vertices: ${d.cut_vertices.join(" ") || "none"}`);
        break;
      }
      case "treedecomp": {
        draw(res.graph);
        show(`width ${d.width ?? "-"}, ${d.bags.length} bags\n` + d.bags.map((b, i) => `bag ${i}: ${b.join(" ")}`).join("\n"));
        break;
      }
      case "oct": {
        const x = new Set(d.modulator);
        draw(res.graph, {
          fill: (v) => (x.has(v) ? "#222" : d.side[v] === 0 ? "#4363d8" : "#f58231"),
          strong: (u, v) => !x.has(u) && !x.has(v),
        });
        show(`odd cycle transversal (${d.exact ? "minimum" : "greedy"}): ${d.modulator.join(" ") || "empty"}`);
        break;
      }
      case "chordal": {
        const x = new Set(d.modulator);
        draw(res.graph, { fill: (v) => (x.has(v) ? "#222" : "#3cb44b") });
        show(`chordal deletion set: ${d.modulator.join(" ") || "empty"}\nelimination order of the rest: ${d.peo.join(" ")}`);
        break;
      }
    }
  });
}

await init();
$("gen").onclick = regenerate;
$("run").onclick = runKernel;
$("decompose").onclick = showStructure;
regenerate();
