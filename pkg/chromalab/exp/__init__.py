"""Experiment utilities: CLI arguments, logging, seeds, output files and run reports."""
