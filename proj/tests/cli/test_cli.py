"""End-to-end checks of the flatcyclo command-line tool.

Usage: test_cli.py /path/to/flatcyclo
"""

import json
import subprocess
import sys
import unittest

BIN = None

M127 = 2**127 - 1
M_P2 = 19396094914493492417412352623610788052879
M_P3 = 277206261634134971844028938110798851397484091203319282999801642607689554229994773
M_HW = int(
    "3144280094472279441139867399991460381645363193783142644102273813658808597364717079870210"
    "3022370537039135233707348104609"
)


def run(*args):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def reference_coeffs(n):
    try:
        from sympy import Poly, cyclotomic_poly, symbols
    except ImportError:  # pragma: no cover
        return None
    x = symbols("x")
    return [int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs())]


class TermsTest(unittest.TestCase):
    def test_csv_limit(self):
        rc, out, _ = run("terms", 3, 13, 79, "--format", "csv", "--limit", 3)
        self.assertEqual(rc, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "exponent,coeff")
        self.assertEqual(lines[1:4], ["0,1", "1,1", "2,1"])
        self.assertTrue(lines[4].startswith("#"))
        self.assertEqual(len(lines), 5)

    def test_jsonl_count_and_format(self):
        rc, out, _ = run("terms", 3, 13, 79)
        self.assertEqual(rc, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 225)
        first = json.loads(lines[0])
        self.assertEqual(first, {"e": "0", "c": 1})
        self.assertEqual(lines[0], '{"e":"0","c":1}')
        self.assertEqual(json.loads(lines[-1]), {"e": "1872", "c": 1})
        self.assertTrue(all(isinstance(json.loads(l)["e"], str) for l in lines))

    def test_reconstruction_matches_reference(self):
        for p1, p2, p3 in [(3, 7, 43), (3, 13, 79), (3, 7, 127)]:
            n = p1 * p2 * p3
            rc, out, _ = run("terms", p1, p2, p3)
            self.assertEqual(rc, 0)
            terms = [json.loads(l) for l in out.splitlines()]
            exps = [int(t["e"]) for t in terms]
            self.assertEqual(exps, sorted(set(exps)))
            dense = [0] * (exps[-1] + 1)
            for t in terms:
                dense[int(t["e"])] = t["c"]
            rc_v, out_v, _ = run("verify", p1, p2, p3)
            self.assertEqual(rc_v, 0, out_v)
            self.assertIn("PASS oracle-equivalence", out_v)
            ref = reference_coeffs(n)
            if ref is not None:
                self.assertEqual(dense, ref)

    def test_csv_and_jsonl_agree(self):
        _, js, _ = run("terms", 3, 7, 43)
        _, cs, _ = run("terms", 3, 7, 43, "--format", "csv")
        from_json = [(json.loads(l)["e"], str(json.loads(l)["c"])) for l in js.splitlines()]
        from_csv = [tuple(l.split(",")) for l in cs.splitlines()[1:]]
        self.assertEqual(from_json, from_csv)

    def test_errors(self):
        rc, out, err = run("terms", 3, 11, 79)
        self.assertEqual(rc, 2)
        self.assertEqual(out, "")
        self.assertIn("mod p1", err)
        rc, _, err = run("terms", M127, M_P2, M_P3)
        self.assertEqual(rc, 3)

    def test_pipe_closure_terminates(self):
        # About 1.2e9 terms; the writer must stop soon after the reader leaves.
        proc = subprocess.Popen([BIN, "terms", "3", "7", "1050000841"], stdout=subprocess.PIPE)
        first = proc.stdout.readline()
        for _ in range(10000):
            proc.stdout.readline()
        proc.stdout.close()
        proc.wait(timeout=30)
        self.assertEqual(first.strip(), b'{"e":"0","c":1}')


class VerifyTest(unittest.TestCase):
    def test_small_triples_pass(self):
        rc, out, _ = run("verify", 3, 7, 43)
        self.assertEqual(rc, 0)
        self.assertNotIn("FAIL", out)
        rc, out, _ = run("verify", 3, 13, 79)
        self.assertEqual(rc, 0)
        self.assertIn("terms: 225", out)

    def test_rejections(self):
        self.assertEqual(run("verify", 3, 11, 79)[0], 2)
        rc, _, err = run("verify", M127, M_P2, M_P3)
        self.assertEqual(rc, 3)
        self.assertIn("hw", err)
        self.assertEqual(run("verify", 3, 13, 79, "--budget", 1000)[0], 3)


class AnalyticsTest(unittest.TestCase):
    def test_hw(self):
        self.assertEqual(run("hw", 3, 13, 79)[1].strip(), "225")
        self.assertEqual(int(run("hw", M127, M_P2, M_P3)[1]), M_HW)
        self.assertEqual(run("hw", 3, 11, 79)[0], 2)

    def test_density(self):
        rc, out, _ = run("density", 3, 13, 79)
        self.assertEqual(rc, 0)
        self.assertEqual(out.strip(), "225/1872 ≈ 0.1202")
        rc, out, _ = run("density", 3, 13, 79, "--asymptote", "--digits", 6)
        self.assertIn("2/39", out)
        self.assertEqual(run("density", 3, 11, 79)[0], 2)

    def test_coeff(self):
        self.assertEqual(run("coeff", 3, 13, 79, 0)[1].strip(), "1")
        self.assertEqual(run("coeff", 3, 13, 79, 13)[1].strip(), "-1")
        self.assertEqual(run("coeff", 3, 13, 79, 1873)[0], 2)
        self.assertEqual(run("coeff", 3, 11, 79, 0)[0], 2)
        _, out, _ = run("terms", 3, 7, 43)
        streamed = {int(json.loads(l)["e"]): json.loads(l)["c"] for l in out.splitlines()}
        for e in range(0, 505, 17):
            self.assertEqual(int(run("coeff", 3, 7, 43, e)[1]), streamed.get(e, 0))


class SearchTest(unittest.TestCase):
    def test_small(self):
        rc, out, _ = run("search", 3)
        self.assertEqual(rc, 0)
        self.assertIn("p2=7", out)
        self.assertIn("p3=43", out)
        self.assertIn("hw=113", out)

    def test_mersenne(self):
        rc, out, _ = run("search", M127)
        self.assertEqual(rc, 0)
        fields = dict(line.split("=", 1) for line in out.splitlines())
        self.assertEqual(int(fields["p2"]), M_P2)
        self.assertEqual(int(fields["p3"]), M_P3)
        self.assertEqual(int(fields["hw"]), M_HW)

    def test_rejections(self):
        self.assertEqual(run("search", 4)[0], 2)
        self.assertEqual(run("search", "abc")[0], 2)
        self.assertEqual(run("search", 7, "--cap", 1)[0], 3)


class UsageTest(unittest.TestCase):
    def test_usage_errors_exit_2(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("hw", 3, 13)[0], 2)
        self.assertEqual(run("hw", 3, "x", 79)[0], 2)
        self.assertEqual(run("terms", 3, 13, 79, "--format", "xml")[0], 2)


if __name__ == "__main__":
    BIN = sys.argv.pop(1)
    unittest.main()
