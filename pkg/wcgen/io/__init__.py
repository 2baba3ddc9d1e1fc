"""Graph file formats and the benchmark harness."""
