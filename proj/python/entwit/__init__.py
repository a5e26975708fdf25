"""Entanglement-structure witnesses for graph states.

Thin convenience layer over the C++ core: each function mirrors one CLI
subcommand and returns the parsed JSON report.
"""

import json as _json

from ._entwit import RunConfig, cut_entropy, run_command, witness_constant

__all__ = [
    "RunConfig",
    "bounds",
    "cut_entropy",
    "intactness",
    "simulate",
    "verify",
    "witness_constant",
]


def _config(graph="", partition="", kind="genuine", m=0, keep=(), noise="0",
            shots=0, seed=0, z_threshold=3.0, **overrides):
    cfg = RunConfig()
    cfg.graph_spec = graph
    cfg.partition_text = partition
    cfg.kind = kind
    cfg.m = m
    cfg.keep_blocks = list(keep)
    cfg.noise_text = str(noise)
    cfg.shots = shots
    cfg.seed = seed
    cfg.z_threshold = z_threshold
    cfg.format = "json"
    for name, value in overrides.items():
        setattr(cfg, name, value)
    return cfg


def _run(name, cfg):
    code, out, err = run_command(name, cfg)
    if code != 0:
        raise RuntimeError(f"{name} failed ({code}): {err.strip() or out.strip()}")
    return _json.loads(out)


def bounds(graph, partition="", m=0, keep=(), **overrides):
    """Fidelity bounds, witness constants and noise thresholds."""
    return _run("bounds", _config(graph=graph, partition=partition, m=m, keep=keep, **overrides))


def simulate(graph, kind="genuine", partition="", m=0, keep=(), noise="0",
             shots=0, seed=0, **overrides):
    """Evaluate one witness on exact expectations (shots=0) or sampled data."""
    return _run("simulate", _config(graph=graph, kind=kind, partition=partition, m=m,
                                    keep=keep, noise=noise, shots=shots, seed=seed, **overrides))


def intactness(graph, noise="0", shots=0, seed=0, **overrides):
    """Scan m-separability witnesses and bound the entanglement intactness."""
    return _run("intactness", _config(graph=graph, noise=noise, shots=shots, seed=seed,
                                      **overrides))


def verify():
    """Self-check against the exact dense oracle; returns (ok, report)."""
    code, out, err = run_command("verify", _config())
    return code == 0, out + err
