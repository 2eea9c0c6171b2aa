"""
Setup verification script.
Checks that the dependencies import, the configuration is sane and a small
end-to-end computation succeeds.
"""

import importlib
import sys
from importlib.metadata import version
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))


def check_imports() -> bool:
    """Import every runtime and test dependency and report its version."""
    print("\n" + "=" * 60)
    print("  Dependencies")
    print("=" * 60 + "\n")

    # import name -> distribution name
    required = [
        ("networkx", "networkx"),
        ("numpy", "numpy"),
        ("dotenv", "python-dotenv"),
        ("loguru", "loguru"),
        ("pytest", "pytest"),
        ("hypothesis", "hypothesis"),
    ]

    missing = []
    for module, dist in required:
        try:
            importlib.import_module(module)
        except ImportError:
            print(f"  ❌ {dist} missing")
            missing.append(dist)
            continue
        print(f"  ✅ {dist} {version(dist)}")
    return not missing


def check_configuration() -> bool:
    """Check if configuration is valid."""
    print("\n" + "=" * 60)
    print("  Checking Configuration")
    print("=" * 60 + "\n")

    try:
        from config.settings import settings

        if settings.validate():
            print(f"  ✅ Guards and thread count (threads={settings.THREADS})")
            return True
        print("  ❌ Invalid guard values")
        return False
    except Exception as e:
        print(f"  ❌ Error loading configuration: {e}")
        return False


def check_smoke() -> bool:
    """Build the smallest line-graph witness and solve a tiny MWIS instance."""
    print("\n" + "=" * 60)
    print("  Running Smoke Computations")
    print("=" * 60 + "\n")

    try:
        from constructions import witness_linegraph_spider
        from graphs import cycle
        from si_engine import verify_witness
        from solvers import mis

        print("  → Line-graph witness (t=1, q=2)...", end=" ")
        ok = bool(verify_witness(witness_linegraph_spider(1, 2)))
        print("✅" if ok else "❌")

        print("  → Independence number of C5...", end=" ")
        size, _, _ = mis(cycle(5))
        print("✅" if size == 2 else f"❌ (got {size})")
        return ok and size == 2
    except Exception as e:
        print("❌")
        print(f"  Error: {e}")
        return False


def main() -> int:
    """Run all setup checks."""
    print("\n" + "█" * 60)
    print("  SI-SUBGRAPH TOOLKIT - SETUP VERIFICATION")
    print("█" * 60)

    results = [check_imports(), check_configuration(), check_smoke()]

    print("\n" + "=" * 60)
    print("  Summary")
    print("=" * 60 + "\n")
    print(f"  Total checks: {len(results)}")
    print(f"  Passed: {sum(results)}")
    print(f"  Failed: {len(results) - sum(results)}\n")
    if all(results):
        print("  🎉 All checks passed!")
        return 0
    print("  ❌ Setup incomplete. Run: pip install -r requirements.txt")
    return 1


if __name__ == "__main__":
    sys.exit(main())
