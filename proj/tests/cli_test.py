# Copyright 2026 The multicorr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the multicorr command line: exit codes, report
contents, byte-level determinism and schema validity."""

import json
import os
import subprocess
import sys
import unittest

import jsonschema

BINARY = None
SCHEMA = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("MULTICORR_MAX_QUBITS", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)
        cls.validator = jsonschema.Draft202012Validator(cls.schema)

    def report(self, *args, code=0):
        rc, out, err = run(*args)
        self.assertEqual(rc, code, msg=err)
        doc = json.loads(out)
        self.validator.validate(doc)
        return doc

    def test_covariance_mixture_pauli(self):
        doc = self.report("covariance", "--family", "kaszlikowski", "--n", "5", "--mode", "pauli")
        self.assertTrue(doc["result"]["all_below_tol"])
        self.assertEqual(doc["result"]["evaluated_count"], 243)
        self.assertTrue(doc["verified"])

    def test_covariance_ghz(self):
        doc = self.report("covariance", "--family", "ghz_classical", "--n", "4")
        self.assertEqual(doc["result"]["max_abs"], 1)
        self.assertEqual(doc["result"]["argmax"], "zzzz")
        doc = self.report("covariance", "--family", "ghz_classical", "--n", "3")
        self.assertTrue(doc["result"]["all_below_tol"])

    def test_covariance_optimize(self):
        doc = self.report("covariance", "--family", "kaszlikowski", "--n", "3",
                          "--mode", "optimize", "--seed", "5")
        self.assertLess(doc["result"]["max_abs"], 1e-7)
        self.assertEqual(doc["seed"], 5)

    def test_cuts_dephased_mixture(self):
        doc = self.report("cuts", "--family", "kaszlikowski", "--n", "7", "--dephase")
        rows = doc["result"]["rows"]
        self.assertEqual(len(rows), 63)
        self.assertLess(max(r["abs_delta"] for r in rows), 1e-9)
        self.assertTrue(doc["result"]["genuine"])
        self.assertTrue(doc["state"]["dephased"])

    def test_cuts_parity_even(self):
        doc = self.report("cuts", "--family", "parity_even", "--n", "4")
        self.assertTrue(all(r["mutual_information"] == 1 for r in doc["result"]["rows"]))

    def test_cuts_random_product(self):
        doc = self.report("cuts", "--family", "random_product", "--n", "4", "--seed", "9")
        self.assertFalse(doc["result"]["genuine"])
        self.assertIsNotNone(doc["result"]["separating_cut"])

    def test_cuts_hv_and_ppt(self):
        doc = self.report("cuts", "--family", "kaszlikowski", "--n", "3", "--hv", "--ppt",
                          "--restarts", "4", "--jobs", "2")
        for row in doc["result"]["rows"]:
            self.assertLess(row["ppt_min_eigenvalue"], 0)
            self.assertGreater(row["hv_value"], 0)

    def test_postulate(self):
        doc = self.report("postulate")
        cov = doc["result"]["verdicts"][0]
        self.assertEqual((cov["value_before"], cov["value_after"]), (0, 1))
        self.assertTrue(cov["postulate_violated"])

    def test_lemma(self):
        doc = self.report("lemma", "--n", "3", "--trials", "20", "--seed", "1")
        self.assertEqual(doc["result"]["agreed_trials"], 20)

    def test_pairwise(self):
        doc = self.report("pairwise", "--family", "kaszlikowski", "--n", "5", "--dephase")
        for p in doc["result"]["pairs"]:
            self.assertAlmostEqual(p["mutual_information"], 0.029049, places=6)

    def test_reproduce_json(self):
        doc = self.report("reproduce-paper", "--format", "json", "--trials", "20")
        self.assertEqual(doc["result"]["passed"], doc["result"]["total"])
        self.assertEqual(doc["result"]["total"], 12)

    def test_reproduce_table_default(self):
        rc, out, _ = run("reproduce-paper", "--trials", "10")
        self.assertEqual(rc, 0)
        self.assertEqual(out.count("PASS"), 12)

    def test_csv(self):
        rc, out, _ = run("cuts", "--family", "ghz_classical", "--n", "3", "--format", "csv")
        self.assertEqual(rc, 0)
        lines = out.strip().split("\n")
        self.assertEqual(lines[0].split(",")[0], "cut")
        self.assertEqual(len(lines), 4)

    def test_determinism(self):
        for args in (["covariance", "--family", "random_product", "--n", "4", "--seed", "3",
                      "--mode", "optimize", "--restarts", "4"],
                     ["cuts", "--family", "random_classical", "--n", "4", "--seed", "2"],
                     ["lemma", "--n", "2", "--trials", "5", "--seed", "8"]):
            first = run(*args)
            second = run(*args)
            self.assertEqual(first, second)

    def test_usage_errors(self):
        self.assertEqual(run("covariance", "--family", "nonexistent")[0], 2)
        self.assertEqual(run("covariance", "--family", "kaszlikowski", "--n", "4")[0], 2)
        self.assertEqual(run("covariance")[0], 2)
        self.assertEqual(run("bogus")[0], 2)
        self.assertEqual(run("lemma", "--trials", "0")[0], 2)
        self.assertEqual(run("cuts", "--family", "ghz_classical", "--format", "xml")[0], 2)

    def test_capacity_errors(self):
        self.assertEqual(run("lemma", "--n", "5")[0], 4)
        self.assertEqual(run("cuts", "--family", "ghz_classical", "--n", "10", "--hv")[0], 4)
        self.assertEqual(run("covariance", "--family", "ghz_classical", "--n", "13")[0], 4)
        rc, _, _ = run("covariance", "--family", "ghz_classical", "--n", "5",
                       env={"MULTICORR_MAX_QUBITS": "4"})
        self.assertEqual(rc, 4)

    def test_claim_failure_exit_code(self):
        # A loose tolerance cannot break the vanishing claim; a negative one must.
        rc, out, _ = run("covariance", "--family", "kaszlikowski", "--n", "3", "--tol", "-1")
        self.assertEqual(rc, 3)
        self.assertFalse(json.loads(out)["verified"])


if __name__ == "__main__":
    BINARY, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
