import init, { restrict, unit_line_variations, divides } from "./pkg/fewnomial_wasm.js";

const $ = (id) => document.getElementById(id);

function show(target, json) {
  const value = JSON.parse(json);
  target.classList.toggle("err", "error" in value);
  target.textContent = "error" in value ? value.error : JSON.stringify(value, null, 2);
  return value;
}

function draw(canvas, samples, roots) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const finite = samples.filter(([, y]) => Number.isFinite(y));
  if (finite.length === 0) return;
  const xs = finite.map(([x]) => x);
  const ys = finite.map(([, y]) => y).sort((p, q) => p - q);
  // clip the vertical range to the central 90% so a steep tail does not flatten the plot
  const lo = ys[Math.floor(ys.length * 0.05)];
  const hi = ys[Math.ceil(ys.length * 0.95) - 1];
  const span = Math.max(hi - lo, 1e-9);
  const yMin = Math.min(lo - 0.1 * span, 0);
  const yMax = Math.max(hi + 0.1 * span, 0);
  const xMin = xs[0];
  const xMax = xs[xs.length - 1];
  const px = (x) => ((x - xMin) / (xMax - xMin)) * width;
  const py = (y) => height - ((y - yMin) / (yMax - yMin)) * height;

  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(0, py(0));
  ctx.lineTo(width, py(0));
  ctx.moveTo(px(0), 0);
  ctx.lineTo(px(0), height);
  ctx.stroke();

  ctx.strokeStyle = "#1565c0";
  ctx.lineWidth = 2;
  ctx.beginPath();
  finite.forEach(([x, y], i) => {
    const cy = Math.max(-height, Math.min(2 * height, py(y)));
    if (i === 0) ctx.moveTo(px(x), cy);
    else ctx.lineTo(px(x), cy);
  });
  ctx.stroke();

  ctx.fillStyle = "#c62828";
  for (const r of roots) {
    const [n, d] = r.root.split("/").map(Number);
    const x = n / d;
    if (r.present && x >= xMin && x <= xMax) {
      ctx.beginPath();
      ctx.arc(px(x), py(0), 4, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
}

await init();

$("r-go").onclick = () => {
  const out = show($("r-out"), restrict($("r-f").value, $("r-a").value, $("r-b").value, Number($("r-w").value)));
  if (out.samples) {
    draw($("plot"), out.samples, out.report.special_roots);
    delete out.samples;
    $("r-out").textContent = JSON.stringify(out, null, 2);
  }
};

$("v-go").onclick = () => show($("v-out"), unit_line_variations($("v-f").value));

$("d-go").onclick = () =>
  show($("d-out"), divides($("d-f").value, $("d-a").value, $("d-b").value, $("d-mode").value, 1));

$("r-go").click();
