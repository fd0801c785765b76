"""Experiment modules (runnable via `python -m experiments.eNNN`)."""
