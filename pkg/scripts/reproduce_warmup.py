"""The order-3 obstruction on w^2 = z^3 + 16 x^6 + 16 y^6 over Q(zeta)."""
import json
import sys

from delpezzo_bm import pipeline


def main() -> int:
    rep = pipeline.warmup_example()
    print(json.dumps(rep.certificate(), indent=2, sort_keys=True, default=str))
    return 0 if rep.matches_fixture and rep.fails_weak_approximation else 4


if __name__ == "__main__":
    sys.exit(main())
