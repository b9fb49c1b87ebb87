"""Test checkpoint persistence and the sweep runner."""

import json
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from promotion_sieve.census import (
    CATALOGUE_VERSION,
    CHECKPOINT_FILENAME,
    SWEEPS,
    SievingCensus,
)
from promotion_sieve.config import SieveConfig


class DummyProgress:
    """Stub for rich.progress.Progress to suppress output in tests."""

    def __init__(self, *args, **kwargs):
        pass

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        pass

    def add_task(self, *args, **kwargs):
        return None

    def update(self, *args, **kwargs):
        pass

    def stop(self):
        pass


def _fake_sweep(calls):
    def passing():
        calls.append("fake:pass")
        return True, "fine"

    def failing():
        calls.append("fake:fail")
        return False, "bad"

    def broken():
        calls.append("fake:error")
        raise RuntimeError("boom")

    return lambda cross_check: [
        ("fake:pass", passing),
        ("fake:fail", failing),
        ("fake:error", broken),
    ]


class TestCheckpointLoadSave(unittest.TestCase):
    """Test loading and saving of the checkpoint file."""

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()
        self.root = Path(self.tempdir.name)
        self.path = self.root / CHECKPOINT_FILENAME
        self.census = SievingCensus(SieveConfig(checkpoint=self.path))

    def tearDown(self):
        self.tempdir.cleanup()

    def test_save_and_load_checkpoint(self):
        data = {"catalogue": CATALOGUE_VERSION, "results": {"a:1": "pass"}}
        self.census.checkpoint = json.loads(json.dumps(data))
        self.census._save_checkpoint()
        with open(self.path, "r") as f:
            self.assertEqual(json.load(f), data)
        self.census.checkpoint = {}
        self.census._load_checkpoint()
        self.assertEqual(self.census.checkpoint, data)
        self.assertFalse((self.root / (CHECKPOINT_FILENAME + ".tmp")).exists())

    def test_load_missing_file(self):
        self.census._load_checkpoint()
        expected = {"catalogue": CATALOGUE_VERSION, "results": {}}
        self.assertEqual(self.census.checkpoint, expected)

    def test_load_catalogue_mismatch(self):
        with open(self.path, "w") as f:
            json.dump({"catalogue": "0", "results": {"a:1": "pass"}}, f)
        self.census._load_checkpoint()
        expected = {"catalogue": CATALOGUE_VERSION, "results": {}}
        self.assertEqual(self.census.checkpoint, expected)

    def test_load_invalid_json(self):
        with open(self.path, "w") as f:
            f.write("not a json")
        self.census._load_checkpoint()
        expected = {"catalogue": CATALOGUE_VERSION, "results": {}}
        self.assertEqual(self.census.checkpoint, expected)

    def test_save_without_path_is_a_no_op(self):
        census = SievingCensus(SieveConfig())
        census._save_checkpoint()
        self.assertEqual(list(self.root.iterdir()), [])


class TestRun(unittest.TestCase):
    """Test running sweeps, recording verdicts and skipping passes."""

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()
        self.path = Path(self.tempdir.name) / CHECKPOINT_FILENAME
        self.config = SieveConfig(checkpoint=self.path, progress=False)
        self.calls = []
        self.sweeps_patcher = patch.dict(
            "promotion_sieve.census.SWEEPS", {"fake": _fake_sweep(self.calls)}
        )
        self.sweeps_patcher.start()
        self.progress_patcher = patch(
            "promotion_sieve.census.Progress", new=DummyProgress
        )
        self.progress_patcher.start()

    def tearDown(self):
        self.progress_patcher.stop()
        self.sweeps_patcher.stop()
        self.tempdir.cleanup()

    def test_verdicts_in_catalogue_order(self):
        results = SievingCensus(self.config).run(["fake"])
        self.assertEqual(
            [(r.key, r.verdict) for r in results],
            [("fake:pass", "pass"), ("fake:fail", "fail"), ("fake:error", "error")],
        )
        self.assertEqual(results[1].detail, "bad")
        self.assertIn("boom", results[2].detail)

    def test_checkpoint_records_verdicts(self):
        SievingCensus(self.config).run(["fake"])
        with open(self.path, "r") as f:
            saved = json.load(f)
        self.assertEqual(saved["catalogue"], CATALOGUE_VERSION)
        self.assertEqual(
            saved["results"],
            {"fake:pass": "pass", "fake:fail": "fail", "fake:error": "error"},
        )

    def test_recorded_passes_are_skipped(self):
        SievingCensus(self.config).run(["fake"])
        self.calls.clear()
        results = SievingCensus(self.config).run(["fake"])
        self.assertCountEqual(self.calls, ["fake:fail", "fake:error"])
        self.assertEqual(results[0].verdict, "skipped")

    def test_no_checkpoint_reruns_everything(self):
        config = SieveConfig(progress=False)
        SievingCensus(config).run(["fake"])
        SievingCensus(config).run(["fake"])
        self.assertEqual(len(self.calls), 6)

    def test_unknown_sweep(self):
        with self.assertRaises(ValueError):
            SievingCensus(self.config).run(["no-such-sweep"])
        self.assertFalse(self.path.exists())


class TestCatalogue(unittest.TestCase):
    """Test the real sweep catalogue."""

    def test_every_key_is_unique_and_prefixed(self):
        for name, build in SWEEPS.items():
            keys = [key for key, _ in build(False)]
            self.assertEqual(len(keys), len(set(keys)), name)
            self.assertTrue(all(key.startswith(name + ":") for key in keys), name)

    @patch("promotion_sieve.census.Progress", new=DummyProgress)
    def test_small_sweep_passes(self):
        config = SieveConfig(progress=False, threads=2)
        results = SievingCensus(config).run(["shst-census"])
        self.assertEqual([r.verdict for r in results], ["pass"])
        self.assertIn("sizes: 3,3; order: 3", results[0].detail)

    def test_kostka_foulkes_sweep_covers_the_full_ranges(self):
        tasks = dict(SWEEPS["kostka-foulkes"](False))
        self.assertIn("kostka-foulkes:modified-vs-classical:9", tasks)
        self.assertIn("kostka-foulkes:knuth:8", tasks)
        self.assertIn("kostka-foulkes:rotation:7", tasks)
        for key in (
            "kostka-foulkes:modified-vs-classical:4",
            "kostka-foulkes:knuth:5",
            "kostka-foulkes:rotation:5",
        ):
            ok, detail = tasks[key]()
            self.assertTrue(ok, detail)

    def test_binomial_exponents_are_reported_failing(self):
        tasks = dict(SWEEPS["stretched-hooks"](False))
        ok, detail = tasks["stretched-hooks:binomial-exponents:1,2,2"]()
        self.assertTrue(ok, detail)
        self.assertIn("q^(n*C(b,2)) M: fail", detail)
        self.assertIn("n*(C(a,2)-C(b,2)): fail", detail)


if __name__ == "__main__":
    unittest.main()
