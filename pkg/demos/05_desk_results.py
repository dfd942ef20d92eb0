"""Summarize the desk-scale studies: preset sweep, spike scores, and chains.

Reads finished runs from ``runs/`` (or ``--root``). Runs that are missing
are trained first, which takes hours on one core. To produce them in the
background instead::

    nohup python3 -m encdec_distill.experiments --root runs > runs/experiments.log &

    python3 demos/05_desk_results.py [--root runs]
"""

import argparse
import logging

from encdec_distill import experiments as ex

ap = argparse.ArgumentParser()
ap.add_argument("--root", default="runs")
args = ap.parse_args()
logging.basicConfig(level=logging.INFO, format="%(message)s")

setup = ex.Setup()
data = ex.load_data(setup)
sweep = ex.objective_sweep(args.root, setup, data)
chain_runs = ex.chains(args.root, setup, data)
print(ex.report(sweep, chain_runs))

med = {arm: ex.median_of(runs, "final_ppl") for arm, runs in sweep.items()}
print(f"\nminiend-d beats scratch: {med['miniend-d'] < med['scratch']}; "
      f"miniend-d at least as good as implicit: {med['miniend-d'] <= med['implicit']}")
print(f"spike scores (median) implicit {ex.median_of(sweep['implicit'], 'spike_score')}, "
      f"miniend-d {ex.median_of(sweep['miniend-d'], 'spike_score')}")
