"""End-to-end checks of the secfan command line tool: outputs and exit codes."""
import json
import os
import subprocess
import sys
import tempfile

SECFAN = os.environ["SECFAN"]
DATA = os.environ["DATA"]
BEES = os.path.join(DATA, "bees.dist")

failures = []


def run(*args, env=None):
    return subprocess.run([SECFAN, *args], capture_output=True, text=True, env=env)


def check(ok, what):
    print(("ok   " if ok else "FAIL ") + what)
    if not ok:
        failures.append(what)


def out_json(*args):
    p = run(*args)
    if p.returncode != 0:
        check(False, f"{' '.join(args)} exited {p.returncode}: {p.stderr.strip()}")
        return {}
    return json.loads(p.stdout)


gen = out_json("gen", "--k", "2", "--n", "4")
check(gen.get("points", [None])[0] == [1, 1, 0, 0] and len(gen["points"]) == 6, "gen Δ(2,4) order")

sub = out_json("subdivide", "--k", "2", "--n", "6", "--lambda")
check(sub.get("spread") == 6 and sub.get("coarsest") is True and sub.get("dressian") is False, "subdivide λ(2,6)")

kap = out_json("subdivide", "--k", "3", "--n", "6", "--kappa")
check(kap.get("spread") == 6 and kap["dual_graph"]["complete"], "subdivide κ(3,6)")

thr = out_json("seccone", "--n", "6", "--k", "2", "--thrackle")
check(thr.get("dim") == 15 and len(thr.get("rays", [])) == 9, "seccone thrackle")

with tempfile.TemporaryDirectory() as tmp:
    cat = os.path.join(tmp, "tri.json")
    en = out_json("enumerate", "--k", "2", "--n", "5", "--catalog", cat)
    check(en.get("complete") is True and en["triangulations"]["orbits"] == 3, "enumerate Δ(2,5)")
    co = out_json("coarsest", "--k", "2", "--n", "5", "--catalog", cat)
    check(co.get("orbits") == 2, "coarsest Δ(2,5)")
    # threads do not change the output
    env = dict(os.environ, SECFAN_THREADS="3")
    p = run("enumerate", "--k", "2", "--n", "5", env=env)
    q = run("enumerate", "--k", "2", "--n", "5")
    check(p.returncode == 0 and p.stdout == q.stdout, "enumerate deterministic under SECFAN_THREADS")
    dot = os.path.join(tmp, "span.dot")
    dec = out_json("decompose", "--metric", BEES, "--dot", dot)
    check(len(dec.get("splits", [])) == 5 and dec.get("coherent") is True, "decompose bees")
    check(os.path.exists(dot) and open(dot).read().startswith("graph tight_span"), "decompose --dot")

mf = out_json("metric-fan", "--n", "5")
check(mf.get("metric_cone", {}).get("orbits") == 3, "metric-fan n=5")

coh = out_json("coherency", "--metric", BEES, "--wrt-metric", BEES)
check(coh.get("coherency_index", {}).get("exact") == "1", "coherency self-index")

ts = run("tightspan", "--k", "2", "--n", "5", "--lambda")
check(ts.returncode == 0 and ts.stdout.startswith("graph tight_span"), "tightspan DOT")

# exit codes
check(run("subdivide", "--k", "2", "--n", "5").returncode == 2, "missing lifting exits 2")
check(run("subdivide", "--bogus").returncode == 2, "unknown flag exits 2")
check(run("subdivide", "--k", "2", "--n", "5", "--heights", "1 2 3").returncode == 2, "wrong height count exits 2")
check(run("metric-fan", "--n", "7").returncode == 3, "resource cap exits 3")
check(run("subdivide", "--metric", "/nonexistent.dist").returncode == 2, "missing file exits 2")

sys.exit(1 if failures else 0)
