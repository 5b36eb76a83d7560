"""Command-line interface: ``dimwit bounds | eval | simulate | certify``.

Results go to standard output or ``--out``; diagnostics go to standard error. Exit status is 0 on success, 2 for
invalid usage or input and 1 for numerical failures.
"""
import argparse
import logging
import os
import sys

import numpy as np

from dimwit.bounds import classical_bound, seesaw_bound, SeesawConfig
from dimwit.core import ProbabilityTable, eval_witness, get_witness, load_witness_file, probs_from_quantum
from dimwit.photonic import PhysicalParams, Scenario, scan_delay, tau_grid, ensemble_preset, measurement_preset
from dimwit.photonic import gamma_of_delay, simulate_counts, optimal_phi
from dimwit.stats import CountsRecord, BoundsTable, witness_with_error, wilson_sigma, certify, confidence_to_k
from dimwit.helper_funcs import *


logger = logging.getLogger('dimwit')

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be a positive integer, got {}'.format(text))
    return value


def _non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('must be a non-negative integer, got {}'.format(text))
    return value


def _non_negative_float(text):
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError('must be a non-negative number, got {}'.format(text))
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError('must be a positive number, got {}'.format(text))
    return value


def _unit_interval(text):
    value = float(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError('must be in [0, 1], got {}'.format(text))
    return value


def _add_witness_args(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--witness', default='i4', help='builtin witness name (default: i4)')
    group.add_argument('--witness-file', help='witness JSON file with "c" or "D" coefficients')


def _add_seesaw_args(parser):
    parser.add_argument('--restarts', type=_positive_int, default=DEFAULT_RESTARTS,
                        help='see-saw random restarts (default: %(default)s)')
    parser.add_argument('--seed', type=_non_negative_int, default=DEFAULT_SEED,
                        help='random seed (default: %(default)s)')
    parser.add_argument('--max-iters', type=_positive_int, default=DEFAULT_MAX_ITERATIONS,
                        help='see-saw iterations per restart (default: %(default)s)')
    parser.add_argument('--tol', type=_positive_float, default=DEFAULT_SEESAW_TOL,
                        help='relative improvement stopping tolerance (default: %(default)s)')


def build_parser():
    parser = argparse.ArgumentParser(prog='dimwit', description='Prepare-and-measure dimension witnesses.')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='count', default=0, help='more log output (repeatable)')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='log errors only')
    parser.add_argument('--threads', type=_non_negative_int,
                        help='worker threads, 0 for all CPUs (overrides {})'.format(THREADS_ENV_VAR))
    sub = parser.add_subparsers(dest='command', metavar='{bounds,eval,simulate,certify}')
    sub.required = True

    bounds = sub.add_parser('bounds', help='classical or quantum bound of a witness in dimension d')
    bounds.add_argument('--model', choices=('classical', 'quantum'), required=True)
    _add_witness_args(bounds)
    bounds.add_argument('--d', type=_positive_int, required=True, help='dimension')
    _add_seesaw_args(bounds)
    bounds.add_argument('--max-strategies', type=_positive_int, default=DEFAULT_MAX_STRATEGIES,
                        help='cap on enumerated classical strategies (default: %(default)s)')
    bounds.add_argument('--symmetry-reduction', action='store_true',
                        help='enumerate only canonical dit assignments')
    bounds.add_argument('--out', help='output JSON file (default: standard output)')

    evaluate = sub.add_parser('eval', help='evaluate a witness on a probability or counts table')
    _add_witness_args(evaluate)
    source = evaluate.add_mutually_exclusive_group(required=True)
    source.add_argument('--probs', help='probability table JSON file')
    source.add_argument('--counts', help='counts JSON file')
    evaluate.add_argument('--out', help='output JSON file (default: standard output)')

    simulate = sub.add_parser('simulate', help='witness of the photonic experiment along a delay scan')
    simulate.add_argument('--scenario', default='qutrit', choices=('qubit', 'qutrit', 'quart', 'bit', 'trit'))
    simulate.add_argument('--dl', type=_positive_float, default=DEFAULT_DL, help='D*L in fs (default: %(default)s)')
    simulate.add_argument('--tau-min', type=float, default=DEFAULT_TAU_MIN, help='first delay in fs')
    simulate.add_argument('--tau-max', type=float, help='last delay in fs (default: 2 DL)')
    simulate.add_argument('--steps', type=_positive_int, default=DEFAULT_SCAN_STEPS, help='number of delays')
    simulate.add_argument('--phi', type=float, default=PRESET_PHI, help='wave-plate angle in degrees')
    simulate.add_argument('--optimize-phi', action='store_true', help='use tan(2 phi) = gamma at every delay')
    simulate.add_argument('--gamma', type=_unit_interval, help='force the coherence factor')
    simulate.add_argument('--visibility', type=_unit_interval, default=DEFAULT_VISIBILITY,
                          help='extra coherence factor (default: %(default)s)')
    simulate.add_argument('--out', help='output CSV file (default: standard output)')
    simulate.add_argument('--shots', type=_positive_int, help='also simulate counts with this many shots per setting')
    simulate.add_argument('--seed', type=_non_negative_int, default=DEFAULT_SEED, help='counts seed')
    simulate.add_argument('--counts-tau', type=float,
                          help='delay in fs of the simulated counts (default: DL/2, full coherence)')
    simulate.add_argument('--counts-out', help='counts JSON file (default: next to --out)')

    cert = sub.add_parser('certify', help='minimum classical and quantum dimension of a witness value')
    _add_witness_args(cert)
    value_source = cert.add_mutually_exclusive_group(required=True)
    value_source.add_argument('--value', type=float, help='witness value')
    value_source.add_argument('--counts', help='counts JSON file')
    cert.add_argument('--sigma', type=_non_negative_float, default=0.0, help='uncertainty of --value')
    threshold = cert.add_mutually_exclusive_group()
    threshold.add_argument('--k', type=_non_negative_float, default=DEFAULT_K,
                           help='confidence multiplier (default: %(default)s; 3 for conservative claims)')
    threshold.add_argument('--confidence', type=float, help='one-sided confidence level converted to k')
    cert.add_argument('--recompute', action='store_true', help='recompute the bounds table instead of the builtin')
    cert.add_argument('--max-d', type=_positive_int, default=SIGNAL_DIMENSION,
                      help='largest dimension for --recompute (default: %(default)s)')
    _add_seesaw_args(cert)
    cert.add_argument('--out', help='output JSON file (default: standard output)')
    return parser


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')
    logger.setLevel(level)


def _load_witness(args):
    if args.witness_file:
        return load_witness_file(args.witness_file)
    return get_witness(args.witness)


def _seesaw_config(args):
    return SeesawConfig(args.restarts, args.max_iters, args.tol, args.seed, args.threads)


def _emit(text, out):
    if not text.endswith('\n'):
        text += '\n'
    if out:
        with open(out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def run_bounds(args):
    spec = _load_witness(args)
    if args.model == 'classical':
        result = classical_bound(spec, args.d, args.max_strategies, args.symmetry_reduction, args.threads)
    else:
        result = seesaw_bound(spec, args.d, _seesaw_config(args))
    _emit(result.to_json(), args.out)


def run_eval(args):
    spec = _load_witness(args)
    doc = {'witness': spec.name}
    if args.probs:
        doc['value'] = eval_witness(spec, ProbabilityTable.load(args.probs))
    else:
        counts = CountsRecord.load(args.counts)
        doc['value'], doc['sigma'] = witness_with_error(spec, counts)
        doc['sigma_wilson'] = wilson_sigma(spec, counts)
    _emit(to_json(doc), args.out)


def _counts_path(args):
    if args.counts_out:
        return args.counts_out
    if args.out:
        return os.path.splitext(args.out)[0] + '.counts.json'
    raise ValueError('--shots needs --out or --counts-out to place the counts JSON.')


def run_simulate(args):
    tau_max = 2 * args.dl if args.tau_max is None else args.tau_max
    taus = tau_grid(args.tau_min, tau_max, args.steps)
    scenario = Scenario.from_name(args.scenario, forced_gamma=args.gamma)
    counts_path = _counts_path(args) if args.shots else None
    params = PhysicalParams(args.dl)
    result = scan_delay(scenario, params, taus, args.phi, args.optimize_phi, args.visibility, args.threads)
    if args.out:
        result.to_csv(args.out)
    else:
        sys.stdout.write(result.to_csv())
    if args.shots:
        counts_tau = args.dl / 2 if args.counts_tau is None else args.counts_tau
        gamma = scenario.effective_gamma(gamma_of_delay(params.with_tau(counts_tau)))
        phi = optimal_phi(gamma * args.visibility) if args.optimize_phi else args.phi
        table = probs_from_quantum(ensemble_preset(scenario, gamma, phi, args.visibility),
                                   measurement_preset(scenario))
        simulate_counts(table, args.shots, args.seed).save(counts_path)
        logger.info('Wrote counts at tau=%g fs to %s.', counts_tau, counts_path)


def run_certify(args):
    spec = _load_witness(args)
    k = args.k if args.confidence is None else confidence_to_k(args.confidence)
    if args.recompute:
        bounds = BoundsTable.recompute(spec, range(1, args.max_d + 1), _seesaw_config(args))
    else:
        bounds = BoundsTable.for_witness(spec)
    sigma_wilson = None
    if args.counts:
        counts = CountsRecord.load(args.counts)
        value, sigma = witness_with_error(spec, counts)
        sigma_wilson = wilson_sigma(spec, counts)
    else:
        value, sigma = args.value, args.sigma
    report = certify(value, sigma, k, bounds)
    report.sigma_wilson = sigma_wilson
    _emit(to_json(report.to_json_dict()), args.out)


COMMANDS = {'bounds': run_bounds, 'eval': run_eval, 'simulate': run_simulate, 'certify': run_certify}


def run(argv=None):
    """Runs one dimwit command and returns its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE
    _configure_logging(args)
    try:
        if args.threads == 0:
            args.threads = os.cpu_count()
        elif args.threads is None:
            args.threads = default_thread_count()
        COMMANDS[args.command](args)
    except (ValueError, OSError) as err:
        print('dimwit: error: {}'.format(err), file=sys.stderr)
        return EXIT_USAGE
    except (RuntimeError, np.linalg.LinAlgError) as err:
        print('dimwit: failed: {}'.format(err), file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def main():
    sys.exit(run())
