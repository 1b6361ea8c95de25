import init, { decide_json, scan_json, family_json } from "./pkg/egyptpoly_web.js";

function poly(coeffs) {
  const terms = [];
  coeffs.forEach((c, i) => {
    if (c === "0") return;
    const v = c.includes("/") ? `(${c})` : c;
    if (i === 0) terms.push(c);
    else if (i === 1) terms.push(c === "1" ? "λ" : `${v}λ`);
    else terms.push(c === "1" ? `λ^${i}` : `${v}λ^${i}`);
  });
  return terms.length ? terms.join(" + ").replaceAll("+ -", "- ") : "0";
}

function values(form) {
  return Object.fromEntries(new FormData(form).entries());
}

function show(out, html) {
  out.innerHTML = html;
}

function fail(out, err) {
  out.innerHTML = `<p class="error">${String(err)}</p>`;
}

function triple(t) {
  return `<pre>x = ${poly(t.x)}\ny = ${poly(t.y)}\nz = ${poly(t.z)}</pre>`;
}

function renderDecision(doc) {
  const inst = doc.instance;
  let html = `<p><b>${inst.m}/(${inst.n0} + ${inst.n1}λ)</b>: ${doc.status}`;
  html += ` (${doc.solutions.length} solution${doc.solutions.length === 1 ? "" : "s"})</p>`;
  for (const s of doc.solutions) {
    const p = s.params;
    html += `<p>k=${p.k}, l=${p.l}, s=${p.s}, r=${p.r}</p>` + triple(s);
  }
  if (!doc.solutions.length) {
    if (!doc.kl_pairs.length) html += "<p>No k, l with n1 = l(mk - 1).</p>";
    for (const e of doc.evidence) {
      html += `<p>k=${e.k}, l=${e.l}, family ${e.family}, x0=${e.x0}: ${e.failure.replaceAll("_", " ")}</p>`;
    }
  }
  return html;
}

function setup(id, handler) {
  const section = document.getElementById(id);
  const form = section.querySelector("form");
  const out = section.querySelector(".out");
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    try {
      handler(values(form), out);
    } catch (err) {
      fail(out, err);
    }
  });
  return form;
}

function decide(v, out) {
  show(out, renderDecision(JSON.parse(decide_json(v.m, v.n0, v.n1))));
}

const decideForm = setup("decide", decide);

setup("scan", (v, out) => {
  const doc = JSON.parse(scan_json(v.m, v.n1));
  const grid = document.getElementById("grid");
  const s = doc.summary;
  show(out, `<p>${s.residues} residues, ${s.solvable} solvable: {${s.admissible.join(", ")}}</p>`);
  grid.replaceChildren();
  for (const row of doc.rows) {
    const b = document.createElement("button");
    b.textContent = row.instance.n0;
    b.className = row.status;
    b.title = `${row.instance.m}/(${row.instance.n0} + ${row.instance.n1}λ): ${row.status}`;
    b.addEventListener("click", () => {
      decideForm.m.value = row.instance.m;
      decideForm.n0.value = row.instance.n0;
      decideForm.n1.value = row.instance.n1;
      decideForm.requestSubmit();
      decideForm.scrollIntoView({ behavior: "smooth" });
    });
    grid.appendChild(b);
  }
});

setup("family", (v, out) => {
  const doc = JSON.parse(family_json(v.m, v.n0, v.n1, v.x0, v.y0, v.z0, v.branch));
  const d = doc.discriminant;
  show(
    out,
    triple(doc) +
      `<p>identity: ${doc.identity}, integral: ${doc.integral}, degenerate: ${doc.degenerate}</p>` +
      `<p>n0² - x̄0·z̄0 = ${d.lhs} = ${d.rhs} (x̄0 = ${d.xbar0}, z̄0 = ${d.zbar0})</p>`,
  );
});

await init();
decideForm.requestSubmit();
