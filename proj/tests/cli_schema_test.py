#!/usr/bin/env python3
"""Runs the weightvar binary and validates its JSON against docs/schemas."""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

CLI = None
SCHEMAS = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("WEIGHTVAR_CACHE", None)
    if env:
        full_env.update(env)
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=300)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


class Outputs(unittest.TestCase):
    cases = [
        ("roots", ["--type", "G", "--rank", "2"]),
        ("weyl", ["--type", "B", "--rank", "2"]),
        ("restrict", ["--type", "A", "--rank", "2"]),
        ("kernel", ["--type", "A", "--rank", "2", "--lambda", "1,2", "--mu", "1/3,1/5"]),
        ("betti", ["--type", "B", "--rank", "2", "--lambda", "1,2", "--mu", "1/3,1/5"]),
        ("oracle-compare", ["--type", "A", "--rank", "2", "--lambda", "1,2", "--mu", "1/3,1/5"]),
        ("check", ["--type", "A", "--rank", "2", "--lambda", "1,2", "--mu", "1/3,1/5"]),
    ]

    def test_schemas(self):
        for command, args in self.cases:
            with self.subTest(command=command):
                code, out, err = run(command, *args)
                self.assertEqual(code, 0, err)
                self.assertTrue(out.endswith("\n"))
                jsonschema.validate(json.loads(out), schema(command))

    def test_a1_betti_exact(self):
        code, out, _ = run("betti", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "0")
        self.assertEqual(code, 0)
        self.assertEqual(out, '{"betti":[1],"poincare":"1"}\n')

    def test_semantics(self):
        _, out, _ = run("weyl", "--type", "G", "--rank", "2")
        self.assertEqual(json.loads(out)["order"], 12)
        _, out, _ = run("betti", "--type", "A", "--rank", "3", "--lambda", "1,2,3", "--mu", "1/3,1/5,1/7")
        self.assertEqual(json.loads(out)["betti"], [1, 6, 6, 1])
        _, out, _ = run("oracle-compare", "--type", "B", "--rank", "2", "--lambda", "1,2", "--mu", "1/3,1/5")
        doc = json.loads(out)
        self.assertTrue(doc["equal"])
        self.assertEqual(doc["theorem"]["ideal_dims"], doc["half_space_dims"])


class Errors(unittest.TestCase):
    def expect(self, code, name, *args):
        got, out, err = run(*args)
        self.assertEqual(got, code, err)
        self.assertEqual(out, "")
        doc = json.loads(err.strip().splitlines()[-1])
        jsonschema.validate(doc, schema("error"))
        self.assertEqual(doc["error"], name)
        return doc

    def test_exit_codes(self):
        doc = self.expect(2, "MuNotRegularValue", "betti", "--type", "A", "--rank", "2",
                          "--lambda", "1,1", "--mu", "0,0")
        self.assertIn("segment", doc["message"])
        self.expect(2, "MuNotRegularValue", "kernel", "--type", "A", "--rank", "1", "--lambda", "1", "--mu", "2")
        self.expect(3, "InvalidRank", "roots", "--type", "Q", "--rank", "2")
        self.expect(3, "InvalidConfig", "betti", "--type", "A", "--rank", "2", "--lambda", "1", "--mu", "0,0")
        self.expect(3, "InvalidConfig", "betti", "--type", "A", "--rank", "1", "--lambda", "0.5e3", "--mu", "0")
        self.expect(3, "DegreeOverflow", "betti", "--type", "A", "--rank", "2", "--lambda", "1,1",
                    "--mu", "1/3,1/5", "--dmax", "9")
        self.expect(3, "RankLimitExceeded", "weyl", "--type", "E", "--rank", "6")

    def test_unknown_subcommand(self):
        code, _, _ = run("frobnicate")
        self.assertEqual(code, 3)


class Determinism(unittest.TestCase):
    def test_threads_and_cache(self):
        base = ["--type", "A", "--rank", "3", "--lambda", "1,2,3", "--mu", "1/3,1/5,1/7"]
        with tempfile.TemporaryDirectory() as tmp:
            for command in ("betti", "kernel"):
                ref = run(command, *base)[1]
                self.assertTrue(ref)
                for threads in ("1", "2", "8"):
                    cache = str(Path(tmp) / f"{command}-{threads}")
                    for _ in range(2):
                        code, out, err = run(command, *base, "--threads", threads, "--cache-dir", cache)
                        self.assertEqual(code, 0, err)
                        self.assertEqual(out, ref)
                    self.assertTrue((Path(cache) / "billey-A3-v1.json").exists())

    def test_environment_cache(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _, err = run("restrict", "--type", "B", "--rank", "2", "--cache-dir", str(Path(tmp) / "flag"),
                               env={"WEIGHTVAR_CACHE": str(Path(tmp) / "env")})
            self.assertEqual(code, 0, err)
            self.assertTrue((Path(tmp) / "env" / "billey-B2-v1.json").exists())
            self.assertFalse((Path(tmp) / "flag").exists())


if __name__ == "__main__":
    CLI = sys.argv[1]
    SCHEMAS = Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
