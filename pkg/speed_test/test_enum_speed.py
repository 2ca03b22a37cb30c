import inspect
from pathlib import Path
import timeit

import click


@click.group()
def cli():
    pass


@cli.command(name="test_divisor_enumeration")
@click.option("--max-ell", type=int, default=6, show_default=True)
def cli_test_divisor_enumeration(max_ell):
    test_divisor_enumeration(max_ell)


def test_divisor_enumeration(max_ell: int = 6):
    """Recursive Sigma-block enumeration against the brute-force and closure routes.

    Caching is off so every call rebuilds its table.
    """

    func_name = inspect.currentframe().f_code.co_name
    output_filepath = Path(f"{func_name}_result.txt")

    from braidwo.braid.garside import divisor_closure
    from braidwo.config import get_config
    from braidwo.divisors import enumeration
    from braidwo.divisors.enumeration import divisor_words, enumerate_divisors

    N = 3

    lines = ["# divisor enumeration speed", f"# {N = :_}", ""]

    brute_cap = get_config().brute_enum_cap
    for ell in range(1, max_ell + 1):

        def recursive():
            enumeration._TABLES.clear()
            enumerate_divisors(ell, mode="recursive", use_cache=False)

        def brute():
            enumeration._TABLES.clear()
            enumerate_divisors(ell, mode="brute", use_cache=False)

        cases = [
            ("words", lambda: divisor_words(ell)),
            ("recursive", recursive),
            ("closure", lambda: divisor_closure(ell)),
        ]
        if ell <= brute_cap:
            cases.append(("brute", brute))

        for label, func in cases:
            dt = timeit.timeit(func, number=N)
            lines.append(f"ell={ell} {label} :: {dt:.3f} [s]")
            print(lines[-1])
        lines.append("")

    output_filepath.write_text("\n".join(lines))


@cli.command(name="test_unranking")
def cli_test_unranking():
    test_unranking()


def test_unranking():

    func_name = inspect.currentframe().f_code.co_name
    output_filepath = Path(f"{func_name}_result.txt")

    from braidwo.divisors import total_count, unrank_divisor

    N = 1_000

    lines = ["# unranking speed (no table built)", f"# {N = :_}", ""]

    for ell in (4, 6, 8):
        last = total_count(ell)
        dt = timeit.timeit(lambda: unrank_divisor(ell, last // 2), number=N)
        lines.append(f"unrank_divisor({ell}, {last // 2}) :: {dt:.3f} [s]")
        print(lines[-1])
    lines.append("")

    output_filepath.write_text("\n".join(lines))


if __name__ == "__main__":
    cli()
