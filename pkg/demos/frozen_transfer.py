"""Pretrain a C_D controller briefly on the dense walking task, then reuse
its per-leg low-level controllers on the sparse reaching task with their
weights frozen.  The script prints policy checksums at every checkpoint of
the second run so you can see the LLCs stay put while the HLC moves.

Takes a couple of minutes: ``python demos/frozen_transfer.py [out_dir]``.
"""
import sys
import tempfile
from pathlib import Path

from hddrl import evaluate, aggregate, from_dict, load_checkpoint, train
from hddrl.evaluation import EvalSetup

PRETRAIN_STEPS = 60_000
TRANSFER_STEPS = 60_000


def main(out: Path):
    base = {"arch": "c_d", "seed": 1, "max_distance": 1.5}
    train(from_dict({**base, "task": 1, "steps": PRETRAIN_STEPS, "out": str(out / "walk")}))
    art = train(from_dict({**base, "task": 2, "steps": TRANSFER_STEPS, "out": str(out / "reach"),
                           "init_checkpoint": str(out / "walk" / "final"), "freeze": "llc"}))
    print("checkpoint                 hlc       llc_0     llc_3")
    for ckpt in art.checkpoints:
        g = load_checkpoint(ckpt)
        sums = [g.policies[p].checksum()[:8] for p in ("hlc", "llc_0", "llc_3")]
        print(f"{ckpt.name:24s} " + "  ".join(sums))
    row = aggregate(evaluate(art.checkpoints[-1], 2, 1.0, 50, 0, EvalSetup(max_distance=1.5)))
    print(f"reach task, 50 mean-action episodes: success {row.success_ratio:.2f}, "
          f"mean return {row.return_mean:.3f}")


if __name__ == "__main__":
    if len(sys.argv) > 1:
        main(Path(sys.argv[1]))
    else:
        with tempfile.TemporaryDirectory() as tmp:
            main(Path(tmp))
