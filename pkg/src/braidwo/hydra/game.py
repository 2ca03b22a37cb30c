"""Game variant: the player picks any permitted position instead of the critical one."""

from pathlib import Path
from typing import Callable, List, Tuple

import numpy as np

from ..braid.expseq import ExpSeq, parse_expseq
from .dynamics import game_step, permitted_positions

Strategy = Callable[[ExpSeq, int, List[int]], int]


def critical_strategy(b: ExpSeq, t: int, permitted: List[int]) -> int:
    return permitted[0]


def leading_strategy(b: ExpSeq, t: int, permitted: List[int]) -> int:
    return permitted[-1]


def random_strategy(seed: int) -> Strategy:
    rng = np.random.default_rng(seed)

    def choose(b: ExpSeq, t: int, permitted: List[int]) -> int:
        return int(permitted[rng.integers(len(permitted))])

    return choose


class Battle:
    def __init__(self, start: ExpSeq):
        if not start.is_normal:
            raise ValueError(f"Battles start from a normal braid: {start}")
        self.start = start
        self.braid = start
        self.t = 0
        self.moves: List[Tuple[int, int, str]] = []

    @property
    def won(self) -> bool:
        return self.braid.is_trivial

    def permitted(self) -> List[int]:
        return permitted_positions(self.braid)

    def play(self, position: int) -> ExpSeq:
        if self.won:
            raise RuntimeError("The battle is already won")
        new = game_step(self.braid, self.t + 1, position)
        self.t += 1
        self.braid = new
        self.moves.append((self.t, position, str(new)))
        return new

    def play_out(self, strategy: Strategy, max_moves: int) -> bool:
        while not self.won and self.t < max_moves:
            self.play(strategy(self.braid, self.t + 1, self.permitted()))
        return self.won

    def trace_lines(self) -> List[str]:
        lines = [f"# start {self.start}"]
        lines.extend(f"{t}\t{r}\t{state}" for t, r, state in self.moves)
        return lines

    def save_trace(self, filepath: Path):
        Path(filepath).write_text("\n".join(self.trace_lines()) + "\n")

    @classmethod
    def replay(cls, filepath: Path) -> "Battle":
        lines = Path(filepath).read_text().splitlines()
        if not lines or not lines[0].startswith("# start "):
            raise ValueError(f"Not a battle trace: {filepath}")
        battle = cls(parse_expseq(lines[0][len("# start ") :]))
        for line in lines[1:]:
            if not line.strip():
                continue
            t, r, state = line.split("\t")
            battle.play(int(r))
            if str(battle.braid) != state or battle.t != int(t):
                raise ValueError(f"Trace diverges at step {t}: {state} != {battle.braid}")
        return battle
