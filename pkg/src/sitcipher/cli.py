"""Command-line front end.

Subcommands: ``encrypt`` / ``decrypt`` (files, SIT1 container), ``vectors``
(known-answer test vectors), ``avalanche`` (bit-flip experiment), and
``analyze-image`` (full image pipeline: encrypt, decrypt, wrong-key
decrypt, entropy/histogram/correlation reports and figures).

Exit codes: 0 success, 2 usage or validation error, 3 malformed input
data (container, padding, PGM), 4 I/O failure.  Output files are written
to a temporary name and renamed, so a failed run leaves no partial files.
"""

import argparse
import json
import os
import sys
import tempfile
from dataclasses import asdict

import numpy as np

from . import analysis, cipher, modes, pgm

EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_IO = 4

_HEX_DIGITS = set("0123456789abcdefABCDEF")


class CliError(Exception):
    """Fatal CLI error carrying its exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _hex64(text: str, what: str) -> int:
    if len(text) != 16 or not set(text) <= _HEX_DIGITS:
        raise CliError(EXIT_USAGE,
                       f"{what} must be exactly 16 hex characters, got {text!r}")
    return int(text, 16)


def _nonce_for(args) -> int:
    if args.mode == modes.CTR:
        if args.nonce is None:
            raise CliError(EXIT_USAGE, "CTR mode requires --nonce")
        return _hex64(args.nonce, "nonce")
    return 0


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}")


def _write_bytes(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory,
                                   prefix=os.path.basename(path) + ".",
                                   suffix=".tmp")
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc}")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)  # mkstemp creates 0600
        os.replace(tmp, path)
    except OSError as exc:
        os.unlink(tmp)
        raise CliError(EXIT_IO, f"cannot write {path}: {exc}")


def _write_text(path: str, text: str) -> None:
    _write_bytes(path, text.encode("utf-8"))


def _cmd_encrypt(args) -> int:
    key = _hex64(args.key, "key")
    nonce = _nonce_for(args)
    data = _read_bytes(args.input)
    blob = modes.encrypt_message(data, cipher.expand_key(key), args.mode, nonce)
    _write_bytes(args.output, blob)
    return 0


def _cmd_decrypt(args) -> int:
    key = _hex64(args.key, "key")
    blob = _read_bytes(args.input)
    data = modes.decrypt_message(blob, cipher.expand_key(key))
    _write_bytes(args.output, data)
    return 0


def generate_vectors(count: int, seed: int) -> str:
    """Known-answer lines ``key=.. pt=.. ct=..``, deterministic per seed."""
    rng = np.random.default_rng(seed)
    lines = []
    for _ in range(count):
        key = int.from_bytes(rng.bytes(8), "big")
        plaintext = int.from_bytes(rng.bytes(8), "big")
        keys = cipher.expand_key(key)
        ciphertext = cipher.encrypt_block(plaintext, keys)
        if cipher.decrypt_block(ciphertext, keys) != plaintext:
            raise AssertionError("round-trip self-check failed during emission")
        lines.append(f"key={key:016x} pt={plaintext:016x} ct={ciphertext:016x}")
    return "\n".join(lines) + "\n"


def _cmd_vectors(args) -> int:
    if args.count < 1:
        raise CliError(EXIT_USAGE, "--count must be at least 1")
    text = generate_vectors(args.count, args.seed)
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_avalanche(args) -> int:
    if args.trials < 1:
        raise CliError(EXIT_USAGE, "--trials must be at least 1")
    report = analysis.avalanche(args.trials, args.target, args.seed)
    outdir = args.output_dir
    os.makedirs(outdir, exist_ok=True)
    _write_text(os.path.join(outdir, "avalanche.csv"), analysis.avalanche_csv(report))
    _write_text(os.path.join(outdir, "avalanche.json"),
                json.dumps(asdict(report), indent=2) + "\n")
    if not args.no_figures:
        from . import plots
        plots.save_avalanche_summary(report, os.path.join(outdir, "avalanche.png"))
    print(f"target={report.target} trials={report.trials} seed={report.seed} "
          f"mean_flip_fraction={report.mean_flip_fraction:.4f}")
    return 0


def _cmd_analyze_image(args) -> int:
    key = _hex64(args.key, "key")
    nonce = _nonce_for(args)
    img = pgm.read_pgm(_read_bytes(args.input))
    demo = analysis.key_sensitivity_demo(img, key, args.mode, nonce)
    hist_original = analysis.histogram(img)
    hist_encrypted = analysis.histogram(demo.encrypted)
    correlations = analysis.image_correlation_suite(img, demo.encrypted)
    report = {
        "input": args.input,
        "width": img.width,
        "height": img.height,
        "mode": args.mode,
        "nonce": f"{nonce:016x}",
        "wrong_key_flipped_bit": 0,
        "entropy": {
            "original": analysis.entropy(img),
            "encrypted": analysis.entropy(demo.encrypted),
            "wrong_key": analysis.entropy(demo.wrong_key),
        },
        "correlation": asdict(correlations),
        "histogram_chi_square": {
            "original": analysis.chi_square_uniform(hist_original),
            "encrypted": analysis.chi_square_uniform(hist_encrypted),
        },
        "wrong_key_bit_difference": analysis.bit_difference(
            img.pixels, demo.wrong_key.pixels),
        "decryption_exact": demo.decrypted.pixels == img.pixels,
    }

    outdir = args.output_dir
    os.makedirs(outdir, exist_ok=True)
    _write_bytes(os.path.join(outdir, "encrypted.pgm"), pgm.write_pgm(demo.encrypted))
    _write_bytes(os.path.join(outdir, "decrypted.pgm"), pgm.write_pgm(demo.decrypted))
    _write_bytes(os.path.join(outdir, "wrongkey.pgm"), pgm.write_pgm(demo.wrong_key))
    _write_text(os.path.join(outdir, "histogram_original.csv"),
                analysis.histogram_csv(hist_original))
    _write_text(os.path.join(outdir, "histogram_encrypted.csv"),
                analysis.histogram_csv(hist_encrypted))
    _write_text(os.path.join(outdir, "report.json"),
                json.dumps(report, indent=2) + "\n")
    if not args.no_figures:
        from . import plots
        plots.save_histogram_comparison(
            hist_original, hist_encrypted, os.path.join(outdir, "histograms.png"))
        plots.save_correlation_scatter(
            img, demo.encrypted, os.path.join(outdir, "correlation.png"))

    print(f"mode={args.mode} entropy_original={report['entropy']['original']:.4f} "
          f"entropy_encrypted={report['entropy']['encrypted']:.4f}")
    print(f"gamma_plain_cipher={correlations.gamma_plain_cipher:.4f} "
          f"gamma_adjacent_original={correlations.gamma_adjacent_original:.4f} "
          f"gamma_adjacent_encrypted={correlations.gamma_adjacent_encrypted:.4f}")
    print(f"wrong_key_bit_difference={report['wrong_key_bit_difference']:.4f} "
          f"decryption_exact={report['decryption_exact']}")
    print(f"wrote report and images to {outdir}")
    return 0


def _add_key_mode_args(parser, with_mode=True) -> None:
    parser.add_argument("-k", "--key", required=True,
                        help="64-bit key as 16 hex characters")
    if with_mode:
        parser.add_argument("-m", "--mode", choices=[modes.ECB, modes.CTR],
                            default=modes.ECB, help="mode of operation")
        parser.add_argument("-n", "--nonce",
                            help="64-bit CTR nonce as 16 hex characters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sitcipher",
        description="SIT 64-bit block cipher: file encryption and evaluation tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encrypt", help="encrypt a file into a SIT1 container")
    enc.add_argument("input", help="plaintext file")
    enc.add_argument("output", help="container file to write")
    _add_key_mode_args(enc)
    enc.set_defaults(handler=_cmd_encrypt)

    dec = sub.add_parser("decrypt", help="decrypt a SIT1 container")
    dec.add_argument("input", help="container file")
    dec.add_argument("output", help="plaintext file to write")
    _add_key_mode_args(dec, with_mode=False)
    dec.set_defaults(handler=_cmd_decrypt)

    vec = sub.add_parser("vectors", help="emit known-answer test vectors")
    vec.add_argument("-c", "--count", type=int, default=10,
                     help="number of vectors to emit")
    vec.add_argument("-s", "--seed", type=int, default=0,
                     help="seed of the vector generator")
    vec.add_argument("-o", "--output", help="output file (default: stdout)")
    vec.set_defaults(handler=_cmd_vectors)

    ava = sub.add_parser("avalanche", help="run the one-bit-flip experiment")
    ava.add_argument("-t", "--trials", type=int, default=1000)
    ava.add_argument("--target", choices=list(analysis.AVALANCHE_TARGETS),
                     required=True, help="flip a plaintext bit or a key bit")
    ava.add_argument("-s", "--seed", type=int, default=0)
    ava.add_argument("-o", "--output-dir", required=True,
                     help="directory for avalanche.csv/.json/.png")
    ava.add_argument("--no-figures", action="store_true",
                     help="skip the matplotlib figure")
    ava.set_defaults(handler=_cmd_avalanche)

    ana = sub.add_parser("analyze-image",
                         help="encrypt a PGM image and report its statistics")
    ana.add_argument("input", help="8-bit grayscale PGM (P2 or P5)")
    _add_key_mode_args(ana)
    ana.add_argument("-o", "--output-dir", required=True,
                     help="directory for images, CSVs, report.json and figures")
    ana.add_argument("--no-figures", action="store_true",
                     help="skip the matplotlib figures")
    ana.set_defaults(handler=_cmd_analyze_image)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (modes.ContainerError, modes.PaddingError, pgm.PGMError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
