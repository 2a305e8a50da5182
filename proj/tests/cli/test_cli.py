"""End-to-end checks of the ringlab binary: exit codes, schema validity and
byte-identical output across thread counts."""

import json
import os
import subprocess
import sys

import jsonschema

BIN, SCHEMA_DIR = sys.argv[1], sys.argv[2]
failures = []


def schema(name):
    with open(os.path.join(SCHEMA_DIR, name)) as f:
        return json.load(f)


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def expect_code(code, *args, **kw):
    got, _, err = run(*args, **kw)
    expect(got == code, f"exit {code} for {' '.join(args)} (got {got}: {err.strip()[:80]})")


expect_code(0, "check", "T(3,Zmod(2))", "lnzs", "--expect", "false")
expect_code(1, "check", "T(3,Zmod(2))", "lnzs", "--expect", "true")
expect_code(2, "check", "T(0,Zmod(2))", "lnzs")
expect_code(3, "check", "T(3,Zmod(4))", "lnzs", env={"RINGLAB_MAX_CARRIER": "1000"})
expect_code(4, "check", "Zmod(4)", "bogus")
expect_code(4, "bogus-command")
expect_code(0, "check", "-", "reduced", stdin="Zmod(5)")

documents = [
    ("check.schema.json", ["check", "T(2,Zmod(2))", "lnzs,semicommutative"]),
    ("check.schema.json", ["check", "FreeQuot(2,\"xy\",\"square:xx\",6)"]),
    ("check.schema.json", ["check", "TrivExt(TrivExt(Quat()))", "lnzs"]),
    ("check.schema.json", ["check", "CongrSubring(8)", "--timing"]),
    ("verify.schema.json", ["verify-paper"]),
    ("search.schema.json", ["search", "--require", "quasinormal", "--forbid", "lnzs"]),
    ("report.schema.json", ["report", "--budget", "256"]),
]
for name, args in documents:
    code, out, err = run(*args, "--format", "json")
    try:
        jsonschema.validate(json.loads(out), schema(name))
        valid = True
    except Exception as e:  # noqa: BLE001
        valid = False
        err = str(e)[:200]
    expect(code == 0 and valid, f"{' '.join(args)} validates against {name} {'' if valid else err}")

for args in (["check", "T(3,Fp(2))"], ["verify-paper", "--suite", "T3,R4,QNOR"], ["search", "--require", "lnzs",
                                                                                   "--forbid", "reversible"]):
    a = run(*args, "--format", "json", "--threads", "1")[1]
    b = run(*args, "--format", "json", "--threads", "8")[1]
    c = run(*args, "--format", "json", "--threads", "8")[1]
    expect(a == b == c and a, f"{' '.join(args)} is byte-identical across runs and thread counts")

_, out, _ = run("verify-paper", "--suite", "T3,R4", "--format", "md")
expect(out.index("## T3") < out.index("## R4"), "markdown report keeps suite order")

sys.exit(1 if failures else 0)
