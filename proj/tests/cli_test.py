import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BRANK = sys.argv.pop(1)
SCHEMAS = pathlib.Path(sys.argv.pop(1))


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


REPORT = load_schema("report.schema.json")
TENSOR = load_schema("tensor.schema.json")


def run(*args, stdin=None):
    return subprocess.run([BRANK, *args], input=stdin, capture_output=True, text=True, timeout=300)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def gen(self, *args):
        p = run("gen", *args)
        self.assertEqual(p.returncode, 0, p.stderr)
        doc = json.loads(p.stdout)
        jsonschema.validate(doc, TENSOR)
        return p.stdout

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text)
        return str(path)

    def report(self, *args, code, stdin=None):
        p = run(*args, "--timing", stdin=stdin)
        self.assertEqual(p.returncode, code, p.stdout + p.stderr)
        doc = json.loads(p.stdout)
        jsonschema.validate(doc, REPORT)
        return doc

    def test_generators_validate_and_are_deterministic(self):
        cases = [
            ("salmon", "--seed", "3"),
            ("rank-r", "--dims", "3,3,4", "--r", "4", "--seed", "1"),
            ("block-diag", "--seed", "2"),
            ("generic", "--dims", "4,4,4", "--seed", "5"),
            ("symmetric-333", "--seed", "1"),
            ("diagonal", "--dims", "3,3,3"),
            ("rank-one-slices", "--dims", "4,4,3", "--seed", "0"),
            ("rank-one-slices-spread", "--dims", "4,4,5", "--seed", "0"),
        ]
        for args in cases:
            with self.subTest(args=args):
                self.assertEqual(self.gen(*args), self.gen(*args))
        self.assertNotEqual(self.gen("salmon", "--seed", "3"), self.gen("salmon", "--seed", "4"))

    def test_output_file_matches_stdout(self):
        out = self.dir / "t.json"
        p = run("gen", "salmon", "--seed", "3", "-o", str(out))
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(out.read_text(), self.gen("salmon", "--seed", "3"))

    def test_certify_exit_codes(self):
        salmon = self.write("salmon.json", self.gen("salmon", "--seed", "1"))
        doc = self.report("certify", "br4-444", salmon, code=1)
        self.assertEqual(doc["verdict"]["outcome"], "reject")
        doc = self.report("certify", "br4-444", salmon, "--sampled", "--trials", "2", code=1)
        self.assertEqual(doc["sampled"]["outcome"], "reject")

        low = self.write("r4.json", self.gen("rank-r", "--dims", "3,3,4", "--r", "4", "--seed", "2"))
        self.assertEqual(self.report("certify", "br4-334", low, code=0)["verdict"]["outcome"], "accept")
        self.report("certify", "br4-444", low, code=3)

        block = self.write("block.json", self.gen("block-diag", "--seed", "0"))
        self.assertEqual(self.report("certify", "br4-334", block, code=1)["verdict"]["outcome"], "reject")

        slices = self.write("rl.json", self.gen("rank-one-slices", "--dims", "4,4,3", "--seed", "0"))
        self.assertEqual(self.report("certify", "rank-l", slices, code=0)["verdict"]["outcome"], "accept")

        sym = self.gen("symmetric-333", "--seed", "1")
        self.report("certify", "br4-333", stdin=sym, code=0)

    def test_input_errors(self):
        self.report("certify", "br4-444", self.write("bad.json", "{"), code=3)
        self.report("certify", "br4-444", self.write("bad2.json", '{"dims":[1,1,2],"entries":["1"]}'), code=3)
        self.report("certify", "br4-444", str(self.dir / "missing.json"), code=3)
        p = run("gen", "unknown-family")
        self.assertEqual(p.returncode, 3)
        self.assertNotEqual(p.stderr, "")

    def test_eval_reports(self):
        sym = self.write("sym.json", self.gen("symmetric-333", "--seed", "1"))
        doc = self.report("eval", "strassen", sym, code=0)
        self.assertEqual(doc["quantity"], "strassen")
        doc = self.report("eval", "degrees", "--m", "3", "--n", "3", code=0)
        self.assertEqual(doc["values"]["segre"], "6")
        self.assertEqual(doc["values"]["veronese"], "4")
        block = self.write("block.json", self.gen("block-diag", "--seed", "0"))
        self.report("eval", "ranksCLCR", block, code=0)
        rl = self.write("rl.json", self.gen("rank-one-slices", "--dims", "4,4,3", "--seed", "0"))
        self.report("eval", "quadric-rank", rl, code=0)
        r4 = self.write("r4.json", self.gen("rank-r", "--dims", "4,4,4", "--r", "4", "--seed", "3"))
        self.report("eval", "numeric", r4, "--r", "4", code=0)

    def test_text_report(self):
        salmon = self.write("salmon.json", self.gen("salmon", "--seed", "1"))
        p = run("certify", "br4-444", salmon, "--report", "text")
        self.assertEqual(p.returncode, 1)
        self.assertIn("reject", p.stdout)


if __name__ == "__main__":
    unittest.main(verbosity=2)
