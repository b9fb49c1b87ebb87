"""Tests for promotion-sieve."""
