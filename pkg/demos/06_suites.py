"""Cross-checking the fast decision against brute force, at small scale.

The full battery is what ``sgline equiv-suite`` runs; here every suite is cut
down to 50 seeds so the demo finishes in a few seconds.
"""
from sgline import suites

results = suites.run_suites(suites.default_suites(seeds=50))
print(suites.combined_report(results), end="")

# Deliberately break each fixture and watch the cross-check notice.
mutated = suites.fixture_suite(mutate=True)
print()
print(mutated.report(), end="")
