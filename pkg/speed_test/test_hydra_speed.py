import inspect
from pathlib import Path
import timeit

import click

import braidwo as bw


@click.group()
def cli():
    pass


def _write_times(output_filepath, lines, times_d):
    for cmd, v in times_d.items():
        if v is None:
            lines.append("")
        else:
            lines.append(f"{cmd} :: {v:.3f} [s]")
        print(lines[-1])
    lines.append("")
    output_filepath.write_text("\n".join(lines))


@cli.command(name="test_hydra_length")
def cli_test_hydra_length():
    test_hydra_length()


def test_hydra_length():
    """Stepwise iteration against the phase-skipping evaluator."""

    func_name = inspect.currentframe().f_code.co_name
    output_filepath = Path(f"{func_name}_result.txt")

    from braidwo.hydra import hydra_length, hydra_length_fast

    # N = 10
    N = 100

    lines = ["# hydra length evaluation speed", f"# {N = :_}", ""]

    global_d = dict(
        hydra_length=hydra_length,
        hydra_length_fast=hydra_length_fast,
        b2211=bw.normalize((2, 2, 1, 1)),
        delta=bw.braid.delta3(1),
        b112211=bw.normalize((1, 1, 2, 2, 1, 1)),
        b1210=bw.parse_expseq("(1,2,1,0)"),
    )

    times_d = {}

    for cmd, g_keys in [
        ("hydra_length(b2211)", ["hydra_length", "b2211"]),
        ("hydra_length_fast(b2211)", ["hydra_length_fast", "b2211"]),
        ("hydra_length(delta)", ["hydra_length", "delta"]),
        ("hydra_length_fast(delta)", ["hydra_length_fast", "delta"]),
        ("spacer_1", None),
        ("hydra_length_fast(b1210)", ["hydra_length_fast", "b1210"]),
        ("hydra_length_fast(b112211)", ["hydra_length_fast", "b112211"]),
    ]:
        if g_keys is None:
            times_d[cmd] = None
            continue

        g_d = {k: global_d[k] for k in g_keys}
        times_d[cmd] = timeit.timeit(cmd, globals=g_d, number=N)

    _write_times(output_filepath, lines, times_d)


@cli.command(name="test_hardy")
def cli_test_hardy():
    test_hardy()


def test_hardy():

    func_name = inspect.currentframe().f_code.co_name
    output_filepath = Path(f"{func_name}_result.txt")

    from braidwo.ordinals import OMEGA, hardy, nat, omega_power

    N = 1_000

    lines = ["# Hardy hierarchy evaluation speed", f"# {N = :_}", ""]

    global_d = dict(
        hardy=hardy,
        w=OMEGA,
        w2=omega_power(nat(1), 2),
        w_w=omega_power(OMEGA),
    )

    times_d = {}

    for cmd, g_keys in [
        ("hardy(w, 10_000)", ["hardy", "w"]),
        ("hardy(w2, 10_000)", ["hardy", "w2"]),
        ("hardy(w_w, 2)", ["hardy", "w_w"]),
    ]:
        g_d = {k: global_d[k] for k in g_keys}
        times_d[cmd] = timeit.timeit(cmd, globals=g_d, number=N)

    _write_times(output_filepath, lines, times_d)


if __name__ == "__main__":
    cli()
