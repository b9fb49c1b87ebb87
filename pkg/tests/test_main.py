"""Test the argparse entry point for the sweeps."""

import io
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest.mock import patch

from promotion_sieve.census import CHECKPOINT_FILENAME, SweepResult
from promotion_sieve.main import main


class TestMain(unittest.TestCase):
    """Test argument handling and the exit code."""

    def run_main(self, argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
        return code, out.getvalue(), err.getvalue()

    @patch("promotion_sieve.main.SievingCensus")
    def test_all_passing(self, mock_census):
        mock_census.return_value.run.return_value = [
            SweepResult(key="a:1", sweep="a", verdict="pass", detail=""),
            SweepResult(key="a:2", sweep="a", verdict="skipped", detail=""),
        ]
        code, out, _ = self.run_main(["--no-progress"])
        self.assertEqual(code, 0)
        self.assertIn("2 checks, 0 failing", out)
        mock_census.return_value.run.assert_called_once_with(None)
        config = mock_census.call_args.args[0]
        self.assertFalse(config.progress)
        self.assertEqual(config.checkpoint, Path(CHECKPOINT_FILENAME))

    @patch("promotion_sieve.main.SievingCensus")
    def test_failures_are_listed(self, mock_census):
        mock_census.return_value.run.return_value = [
            SweepResult(key="a:1", sweep="a", verdict="fail", detail="bad"),
            SweepResult(key="a:2", sweep="a", verdict="error", detail="boom"),
        ]
        code, out, _ = self.run_main(["--only", "shst-census", "--threads", "3"])
        self.assertEqual(code, 1)
        self.assertIn("fail: a:1 bad", out)
        self.assertIn("error: a:2 boom", out)
        self.assertIn("2 checks, 2 failing", out)
        mock_census.return_value.run.assert_called_once_with(["shst-census"])
        self.assertEqual(mock_census.call_args.args[0].threads, 3)

    @patch("promotion_sieve.main.SievingCensus")
    def test_checkpoint_and_cross_check(self, mock_census):
        mock_census.return_value.run.return_value = []
        self.run_main(["--checkpoint", "results.json", "--cross-check"])
        config = mock_census.call_args.args[0]
        self.assertEqual(config.checkpoint, Path("results.json"))
        self.assertTrue(config.cross_check)

    @patch("promotion_sieve.main.SievingCensus")
    def test_no_checkpoint(self, mock_census):
        mock_census.return_value.run.return_value = []
        self.run_main(["--no-checkpoint"])
        self.assertIsNone(mock_census.call_args.args[0].checkpoint)

    @patch("promotion_sieve.main.SievingCensus")
    def test_threads_must_be_positive(self, mock_census):
        code, _, err = self.run_main(["--threads", "0"])
        self.assertEqual(code, 2)
        self.assertIn("--threads", err)
        mock_census.assert_not_called()


if __name__ == "__main__":
    unittest.main()
