""" Numba kernels of the samplers

Couplings are passed in CSR form (indptr, indices, data) so a local field
costs one pass over the site's neighbours. Random numbers are drawn outside
the kernels, which keeps the kernels free of generator state.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def local_field(spins, site, indptr, indices, data, fields):
    total = fields[site]
    for k in range(indptr[site], indptr[site + 1]):
        total += data[k] * spins[indices[k]]
    return total


@njit(cache=True)
def metropolis_sweeps(spins, indptr, indices, data, fields, betas, uniforms, order):
    """ Metropolis passes at the given inverse temperatures, in place.
    :param spins: (N,) int8 configuration
    :param betas: (T,) inverse temperature per pass
    :param uniforms: (T, N) uniform draws, one per visit
    :param order: (1, N) or (T, N) site order per pass
    """
    n_spins = spins.shape[0]
    rows = order.shape[0]
    for sweep in range(betas.shape[0]):
        beta = betas[sweep]
        visit = order[sweep % rows]
        for k in range(n_spins):
            site = visit[k]
            delta = -2.0 * spins[site] * local_field(spins, site, indptr, indices, data, fields)
            # delta <= 0 is always accepted
            if delta <= 0.0 or uniforms[sweep, k] < np.exp(-beta * delta):
                spins[site] = -spins[site]


@njit(cache=True)
def path_integral_sweeps(replicas, indptr, indices, data, fields, classical, coupling,
                         uniforms, order):
    """ One Metropolis pass over all replicas per schedule step, in place.
    :param replicas: (P, N) int8 imaginary-time slices
    :param classical: (T,) beta * J(s) / P, weight of the problem energy per slice
    :param coupling: (T,) beta * J_perp(s), ferromagnetic weight between adjacent slices
    :param uniforms: (T, P, N) uniform draws
    :param order: (1, N) or (T * P, N) site order per replica pass
    """
    n_slices = replicas.shape[0]
    n_spins = replicas.shape[1]
    rows = order.shape[0]
    for step in range(classical.shape[0]):
        weight = classical[step]
        perp = coupling[step]
        for p in range(n_slices):
            before = replicas[(p - 1) % n_slices]
            after = replicas[(p + 1) % n_slices]
            current = replicas[p]
            visit = order[(step * n_slices + p) % rows]
            for k in range(n_spins):
                site = visit[k]
                spin = current[site]
                field = local_field(current, site, indptr, indices, data, fields)
                action = -2.0 * spin * weight * field
                action += 2.0 * perp * spin * (before[site] + after[site])
                if action <= 0.0 or uniforms[step, p, k] < np.exp(-action):
                    current[site] = -spin


@njit(cache=True)
def _trailing_zeros(value):
    bit = 0
    while (value >> bit) & 1 == 0:
        bit += 1
    return bit


@njit(cache=True)
def _initial_energy(spins, indptr, indices, data, fields):
    energy = 0.0
    for site in range(spins.shape[0]):
        energy += fields[site] * spins[site]
        for k in range(indptr[site], indptr[site + 1]):
            if indices[k] > site:
                energy += data[k] * spins[site] * spins[indices[k]]
    return energy


@njit(cache=True)
def gray_code_minimum(n_spins, indptr, indices, data, fields):
    """ Minimum energy over all 2^N configurations.
    Bit b of the Gray code is spin b, set meaning +1.
    """
    spins = np.full(n_spins, -1, dtype=np.int8)
    energy = _initial_energy(spins, indptr, indices, data, fields)
    best = energy
    for step in range(1, 1 << n_spins):
        site = _trailing_zeros(step)
        energy += -2.0 * spins[site] * local_field(spins, site, indptr, indices, data, fields)
        spins[site] = -spins[site]
        if energy < best:
            best = energy
    return best


@njit(cache=True)
def _gray_code_walk(n_spins, indptr, indices, data, fields, threshold, found):
    spins = np.full(n_spins, -1, dtype=np.int8)
    energy = _initial_energy(spins, indptr, indices, data, fields)
    filled = 0
    if energy <= threshold:
        if found.shape[0] > 0:
            found[filled] = spins
        filled += 1
    for step in range(1, 1 << n_spins):
        site = _trailing_zeros(step)
        energy += -2.0 * spins[site] * local_field(spins, site, indptr, indices, data, fields)
        spins[site] = -spins[site]
        if energy <= threshold:
            if filled < found.shape[0]:
                found[filled] = spins
            filled += 1
    return filled


@njit(cache=True)
def gray_code_collect(n_spins, indptr, indices, data, fields, threshold):
    """Every configuration with energy at most ``threshold``, in Gray-code order."""
    count = _gray_code_walk(n_spins, indptr, indices, data, fields, threshold,
                            np.empty((0, n_spins), dtype=np.int8))
    found = np.empty((count, n_spins), dtype=np.int8)
    _gray_code_walk(n_spins, indptr, indices, data, fields, threshold, found)
    return found


def csr_arrays(model):
    """(indptr, indices, data, fields) of a SpinModel, typed for the kernels."""
    adjacency = model.adjacency
    return (adjacency.indptr.astype(np.int64), adjacency.indices.astype(np.int64),
            adjacency.data.astype(np.float64), np.ascontiguousarray(model.fields, dtype=np.float64))
