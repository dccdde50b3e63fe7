"""
Walk through the obstruction analysis of a few polytopes against a running server
"""

import json
import time

import requests

BASE_URL = "http://localhost:10000/api"

FLAT_PAIR = [[0, 0, 1], [0, 1, -1], [0, 1, 0], [-2, -1, 0], [1, 0, 0]]
SPREAD_PAIR = [[1, 0, 0], [-1, 2, 0], [0, 0, 1], [0, 0, -1], [0, -1, 0]]
SIMPLEX = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]
CUBE = [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]


def check_server():
    """Checks if the server is running"""
    try:
        requests.get(f"{BASE_URL}/scans", timeout=2)
        return True
    except requests.exceptions.ConnectionError:
        print("ERROR: Server is not running!")
        print("\nInstructions:")
        print("   1. Open a new terminal")
        print("   2. Navigate to the project directory")
        print("   3. Start the server: PORT=10000 python app.py")
        print("   4. Run this script again")
        return False
    except Exception as e:
        print(f"Server connection error: {e}")
        return False


def print_separator(title):
    print(f"\n{'='*80}")
    print(f"  {title}")
    print(f"{'='*80}\n")


def print_analysis(result):
    if 'error' in result:
        print(f"\nANALYSIS ERROR: {result['error']}")
        return

    print(f"  Reflexive: {result['reflexive']}")
    print(f"  Facets: {result['facet_count']} ({', '.join(f'{k}={v}' for k, v in result['facet_classes'].items())})")
    for pair in result['pairs']:
        flat = "almost-flat" if pair['almost_flat'] else "not almost-flat"
        print(f"  A{pair['n']} pair {pair['facet_ids']}: pairing {pair['pairing']} ({flat})")
        print(f"     Ext degrees: {pair['ext_degrees']}")
        print(f"     Class group torsion: {pair['class_group']['torsion']}")
        print(f"     Dual edge length: {pair['dual_edge_length']}")
    print(f"\n  Verdict: {result['verdict']}")


def analyze(title, vertices):
    print_separator(title)
    print(f"   Vertices: {vertices}")
    try:
        response = requests.post(f"{BASE_URL}/analyze", json={"vertices": vertices}, timeout=30)
        print(f"\nResponse status: {response.status_code}")
        print_analysis(response.json())
    except requests.exceptions.Timeout:
        print("Request timeout")
    except Exception as e:
        print(f"Error: {e}")


def show_normal_form(vertices):
    print_separator("Normal form of the almost-flat pair")
    response = requests.post(f"{BASE_URL}/normal-form", json={"vertices": vertices}, timeout=30)
    if response.status_code != 200:
        print(f"Unexpected status code: {response.status_code}")
        print(f"Server response: {response.text[:500]}")
        return
    for entry in response.json():
        print(json.dumps(entry['normal_form'], indent=2))
        print(f"  kernel: {entry['kernel']}")


def scan_fixtures():
    print_separator("Scan of all four fixtures")
    blocks = []
    for vertices in (FLAT_PAIR, SPREAD_PAIR, SIMPLEX, CUBE):
        blocks.append(f"{len(vertices)} 3")
        blocks.extend(" ".join(str(x) for x in v) for v in vertices)
    response = requests.post(f"{BASE_URL}/scans", json={"palp": "\n".join(blocks), "label": "demo"}, timeout=60)
    run = response.json()
    if response.status_code != 201:
        print(f"Scan failed: {run}")
        return
    print(f"  total={run['total']}, reflexive={run['reflexive']}, not_smoothable={run['not_smoothable']}")

    flagged = requests.get(f"{BASE_URL}/scans/{run['id']}", params={"verdict": "not_smoothable"}, timeout=30).json()
    print(f"  not smoothable: {[r['index'] for r in flagged['records']]}")


def main():
    if not check_server():
        return

    try:
        analyze("Two adjacent almost-flat A1-triangles", FLAT_PAIR)
        time.sleep(1)
        show_normal_form(FLAT_PAIR)
        time.sleep(1)
        analyze("Adjacent A1-triangles bending inward (pairing -1)", SPREAD_PAIR)
        time.sleep(1)
        analyze("Smooth simplex", SIMPLEX)
        time.sleep(1)
        analyze("Cube: singular, square facets only", CUBE)
        time.sleep(1)
        scan_fixtures()
    except KeyboardInterrupt:
        print("\n\nDemonstration interrupted")
    except Exception as e:
        print(f"\n\nError: {e}")


if __name__ == "__main__":
    main()
