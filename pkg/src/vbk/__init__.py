"""Virtual braids, connecting strings and Yang-Baxter representations."""

__version__ = "0.1.0"
