"""Tour the corridor maze with the swept-disc collision routine: a straight
dash from the start to the red square gets stopped by the first wall and
slides along it, while following the subgoal chain gets through.

Run with ``python demos/maze_walkthrough.py``.
"""
import numpy as np

from hddrl.maze import MazeSpec, maze_collide


def dash(maze, a, b, stride=0.5):
    """Move from a towards b in short strides, returning where the body ends up."""
    p = np.array(a, dtype=float)
    for _ in range(200):
        d = np.asarray(b) - p
        if np.linalg.norm(d) < 1e-6:
            break
        p = maze_collide(maze, p, p + d * min(1.0, stride / np.linalg.norm(d)))
    return p


if __name__ == "__main__":
    maze = MazeSpec()
    print(f"{len(maze.walls)} walls, {maze.thickness} m thick, body radius {maze.radius} m")
    print(f"free path through all subgoals: {maze.path_exists()}")
    red = maze.subgoal_centers[-1]
    end = dash(maze, maze.start, red)
    print(f"straight dash start -> red ends at ({end[0]:.2f}, {end[1]:.2f}), "
          f"{np.linalg.norm(end - red):.2f} m short")

    route = [maze.start, (2.5, 12.5), (7.5, 12.5), (7.5, 2.5), (12.5, 2.5), (12.5, 12.5)]
    p = np.array(maze.start, dtype=float)
    total = 0.0
    for name, reward, centre in zip(("blue", "yellow", "red"), maze.subgoal_rewards, maze.subgoal_centers):
        while not maze.in_square(p, centre):
            waypoint = next(w for w in route if np.linalg.norm(np.subtract(w, p)) > 1e-6)
            p = dash(maze, p, waypoint)
            route.remove(waypoint)
        total += reward
        print(f"reached {name:6s} at ({p[0]:.2f}, {p[1]:.2f}), subgoal reward {reward}, running total {total}")
