"""Command-line runs and the random-corpus oracle equivalence suite."""
