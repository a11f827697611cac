"""Drive the surrogate quadruped with a hand-made wave gait on the three
evaluation terrains and compare distance covered with mechanical power.

No learning happens here: every leg follows a fixed sine/cosine pattern,
each a quarter period behind the previous one.  Joint torques and speeds
do not depend on the ground, so the power column stays flat while rough
terrain eats into the distance.  Run with
``python demos/open_loop_gait.py``.
"""
import numpy as np

from hddrl.evaluation import SWEEP
from hddrl.sim import SimConfig, reset, step
from hddrl.terrain import generate_heightfield

STEPS = 300
PERIOD = 40
PHASES = np.arange(4) * np.pi / 2


def gait(t):
    angle = 2 * np.pi * t / PERIOD + PHASES
    action = np.empty(8)
    action[0::2] = np.sin(angle)
    action[1::2] = np.cos(angle)
    return action


def walk(smoothness, seed=7):
    cfg = SimConfig()
    field = generate_heightfield(seed, smoothness, 40.0, 128)
    state = reset(cfg, field, (20.0, 20.0, 0.0), seed)
    start = state.pos[:2].copy()
    power = []
    for t in range(STEPS):
        state, info = step(state, gait(t), cfg, field)
        power.append(float(info.power))
    rms = float(np.sqrt(np.mean(field.heights ** 2)))
    return rms, float(np.linalg.norm(state.pos[:2] - start)), float(np.mean(power))


if __name__ == "__main__":
    print(f"open-loop wave gait, {STEPS} control steps, gait period {PERIOD}")
    print("smoothness  rms height  displacement  mean power")
    for s in SWEEP:
        rms, dist, power = walk(s)
        print(f"{s:10.1f}  {rms:10.3f}  {dist:12.3f}  {power:10.3f}")
