import init, { build_gadget, solve, deletion_certificate } from "./pkg/twoclub_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");
const COLORS = { orig: "#c0392b", copy: "#2980b9", special: "#8e44ad", filler: "#7f8c8d" };

let gadget = null;

function kindOf(role) {
  const head = role.split(":")[0];
  if (head === "orig" || head === "copy") return head;
  if (head === "x1" || head === "x2") return "filler";
  return "special";
}

// Columns left to right: originals, copies (one row per original),
// a/b/u, X1, X2. Vertices in a column are spread evenly top to bottom.
function layout(g) {
  const columns = [[], [], [], [], []];
  g.roles.forEach((role, id) => {
    const head = role.split(":")[0];
    const col = { orig: 0, copy: 1, a: 2, b: 2, u: 2, x1: 3, x2: 4 }[head];
    columns[col].push(id);
  });
  const pos = new Array(g.n_vertices);
  const xs = [0.08, 0.28, 0.5, 0.72, 0.92];
  columns.forEach((ids, c) => {
    ids.forEach((id, i) => {
      pos[id] = {
        x: xs[c] * canvas.width,
        y: ((i + 1) / (ids.length + 1)) * canvas.height,
      };
    });
  });
  return pos;
}

function draw(highlight = new Set()) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!gadget) return;
  const pos = layout(gadget);
  ctx.lineWidth = 0.5;
  for (const [u, v] of gadget.edges) {
    const lit = highlight.has(u) && highlight.has(v);
    ctx.strokeStyle = lit ? "rgba(241,196,15,0.5)" : "rgba(0,0,0,0.07)";
    ctx.beginPath();
    ctx.moveTo(pos[u].x, pos[u].y);
    ctx.lineTo(pos[v].x, pos[v].y);
    ctx.stroke();
  }
  gadget.roles.forEach((role, id) => {
    const kind = kindOf(role);
    const r = kind === "filler" ? 2.5 : 5;
    ctx.fillStyle = highlight.has(id) ? "#f1c40f" : COLORS[kind];
    ctx.beginPath();
    ctx.arc(pos[id].x, pos[id].y, r, 0, 2 * Math.PI);
    ctx.fill();
    if (kind !== "filler") {
      ctx.fillStyle = "#222";
      ctx.font = "11px sans-serif";
      ctx.fillText(role, pos[id].x + 7, pos[id].y + 4);
    }
  });
}

function run(op) {
  try {
    gadget = JSON.parse(build_gadget($("source").value));
    if (op === "build") {
      $("out").textContent =
        `${gadget.n_vertices} vertices, ${gadget.n_edges} edges\n` +
        `2-club targets for k = 1..${gadget.n}: ${gadget.targets.join(", ")}`;
      draw();
    } else if (op === "solve") {
      const s = JSON.parse(solve($("source").value));
      $("out").textContent =
        `max clique ${s.omega}: {${s.clique.join(", ")}}\n` +
        `max 2-club ${s.max_2club} (target ${s.target})\n` +
        `clique read back from the club: {${s.extracted_clique.join(", ")}}\n` +
        `${s.agree ? "agree" : "DISAGREE"}, ${s.nodes_explored} search nodes`;
      draw(new Set(s.club));
    } else {
      const c = JSON.parse(deletion_certificate($("source").value));
      $("out").textContent =
        `delete {${c.deleted.join(", ")}} (${c.roles.join(", ")}) ` +
        `to leave a 2-club cluster graph`;
      draw(new Set(c.deleted));
    }
  } catch (err) {
    $("out").textContent = `error: ${err}`;
  }
}

await init();
$("build").onclick = () => run("build");
$("solve").onclick = () => run("solve");
$("cert").onclick = () => run("cert");
run("build");
