import sys
import traceback
from pprint import pprint
from pathlib import Path

ROOT = Path(__file__).parents[1].resolve()
# Ensure the asch package is importable
root_path = str(ROOT)
if root_path not in sys.path:
    sys.path.insert(0, root_path)

print('Running smoke tests for asch')

degree = int(sys.argv[1]) if len(sys.argv) > 1 else 3

try:
    from asch.core.config import settings
    print('Worker threads from config:', settings.worker_count)
except Exception as e:
    print('Failed to import config:', e)

code = scheme = cosets = None
print(f'\nBuilding the Gold code at m={degree}...')
try:
    from asch.services.pipeline import scheme_pipeline
    code, scheme, cosets = scheme_pipeline.gold(degree)
    print('Weight counts:', code.weight_counts)
except Exception as e:
    print('Gold code build failed:')
    traceback.print_exc()

profile = fission = None
if scheme is not None:
    print('\nRecognizing the cover and refining R_2...')
    try:
        profile, fission = scheme_pipeline.fission(scheme, cosets)
        pprint({
            'quotient (m, r, s, n)': (profile.m, str(profile.r), str(profile.s), profile.n),
            'cover multiplicities': profile.spectrum.m,
            'fission valencies': fission.cert5.k,
            'fission multiplicities': fission.spectrum5.m,
        })
        print(fission.reconciliation.to_text())
    except Exception as e:
        print('Cover or fission failed:')
        traceback.print_exc()
else:
    print('Skipping cover and fission (no scheme)')

if fission is not None:
    print('Extracting weighing matrices...')
    try:
        bound, family, certificate = scheme_pipeline.weighing(fission, profile)
        print('Bound report:', bound.model_dump())
        print(f'Family: W({family.dim},{family.weight}) over {family.f} cliques')
        print(f'Unbiased pairs: {certificate.pairs_ok}/{certificate.pairs_checked}')
    except Exception as e:
        print('Weighing extraction failed:')
        traceback.print_exc()

print('\nSmoke tests complete')
