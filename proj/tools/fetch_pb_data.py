#!/usr/bin/env python3
"""Fetch and validate the Peterson & Barney vowel formant table.

The toolkit does not bundle the measured corpus; this script downloads a
copy (the classic `verified_pb.data` layout), checks its structure, and
writes it to data/pb.data where the acceptance suite and the CLI expect it.

Usage:
    tools/fetch_pb_data.py [URL ...]

Any URL serving the plain-text table works. Without arguments the script
tries a couple of long-standing public mirrors. If you already have a copy,
skip this script and either place it at data/pb.data or point
FORMANT_NORM_DATA at it.
"""

import sys
import urllib.request
from collections import Counter
from pathlib import Path

DEFAULT_URLS = [
    # CMU AI repository, the source most redistributions trace back to
    "http://www.cs.cmu.edu/afs/cs/project/ai-repository/ai/areas/speech/database/pb/pb.tgz",
]

VOWELS = ["IY", "IH", "EH", "AE", "AH", "AA", "AO", "UH", "UW", "ER"]
GROUP_SPEAKERS = {1: 33, 2: 28, 3: 15}  # men, women, children


def parse(text: str):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#") or not line[0].isdigit():
            continue
        fields = line.replace(",", " ").split()
        if len(fields) != 8:
            raise ValueError(f"line {lineno}: expected 8 fields, got {len(fields)}")
        group, speaker, _idx, code = int(fields[0]), int(fields[1]), fields[2], fields[3].upper()
        freqs = [float(f.rstrip("*")) for f in fields[4:8]]
        if code not in VOWELS:
            raise ValueError(f"line {lineno}: unknown vowel {code}")
        if not (0 < freqs[1] < freqs[2] < freqs[3]):
            raise ValueError(f"line {lineno}: non-monotonic formants")
        rows.append((group, speaker, code, line))
    return rows


def validate(rows) -> None:
    if len(rows) != 1520:
        raise ValueError(f"expected 1520 samples, got {len(rows)}")
    speakers_by_group = {g: set() for g in GROUP_SPEAKERS}
    per_vowel_group = Counter()
    for group, speaker, code, _line in rows:
        speakers_by_group[group].add(speaker)
        per_vowel_group[(code, group)] += 1
    for group, expected in GROUP_SPEAKERS.items():
        if len(speakers_by_group[group]) != expected:
            raise ValueError(
                f"group {group}: expected {expected} speakers, got {len(speakers_by_group[group])}")
    for code in VOWELS:
        counts = tuple(per_vowel_group[(code, g)] for g in (1, 2, 3))
        if counts != (66, 56, 30):
            raise ValueError(f"vowel {code}: per-group counts {counts} != (66, 56, 30)")


def fetch(url: str) -> str:
    with urllib.request.urlopen(url, timeout=60) as resp:
        payload = resp.read()
    if url.endswith((".tgz", ".tar.gz")):
        import io
        import tarfile

        with tarfile.open(fileobj=io.BytesIO(payload)) as tar:
            for member in tar.getmembers():
                if member.isfile() and member.name.lower().endswith(".data"):
                    return tar.extractfile(member).read().decode("utf-8", "replace")
        raise ValueError("archive contains no .data member")
    return payload.decode("utf-8", "replace")


def main() -> int:
    urls = sys.argv[1:] or DEFAULT_URLS
    out_path = Path(__file__).resolve().parent.parent / "data" / "pb.data"
    for url in urls:
        print(f"trying {url} ...")
        try:
            text = fetch(url)
            rows = parse(text)
            validate(rows)
        except Exception as exc:  # noqa: BLE001 - report and try the next mirror
            print(f"  failed: {exc}")
            continue
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text("\n".join(line for *_ignored, line in rows) + "\n")
        print(f"wrote {out_path} ({len(rows)} samples)")
        return 0
    print("no source worked; download the table manually and save it as data/pb.data")
    return 1


if __name__ == "__main__":
    sys.exit(main())
