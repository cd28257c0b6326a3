import os

import pytest

from ecsteg_shared.cli import (
    EXIT_DATA_ERROR,
    EXIT_STATISTICAL_FAILURE,
    EXIT_SUCCESS,
    EXIT_USAGE,
)
from ecsteg_shared.cli.main import run_cli
from ecsteg_shared.feature_toggling import FeatureToggling
from ecsteg_shared.main import ecsteg_parser

MESSAGE = b"meet me at the usual place"
WORDS_CHANNEL = "the\t5\ncat\t2\nsat\t2\non\t3\nmat\t1\ndog\t2\nran\t1\nyes\t2\n"
SIXTEEN_CHANNEL = "".join("t{:02d}\t1\n".format(i) for i in range(16))
SEEDED = ["--insecure-deterministic", "--seed", "7"]


def _run(argv):
    args = ecsteg_parser(None, argv)
    FeatureToggling.update_from_args(args)
    return run_cli(args)


@pytest.fixture()
def workdir(tmp_path):
    (tmp_path / "message.bin").write_bytes(MESSAGE)
    (tmp_path / "words.tsv").write_text(WORDS_CHANNEL)
    (tmp_path / "sixteen.tsv").write_text(SIXTEEN_CHANNEL)
    return tmp_path


@pytest.fixture()
def keys(workdir):
    prefix = str(workdir / "alice")
    assert (
        _run(
            ["keygen", "--curve", "toy-1019", "--encoding", "swu", "--output-prefix", prefix]
            + SEEDED
        )
        == EXIT_SUCCESS
    )
    return prefix + ".pub", prefix + ".sec"


def test_keygen_writes_both_files_and_prints_the_fingerprint(workdir, capsys):
    prefix = str(workdir / "bob")
    code = _run(
        ["keygen", "--curve", "toy-1039", "--encoding", "sw", "--output-prefix", prefix]
        + SEEDED
    )
    assert code == EXIT_SUCCESS
    assert os.path.isfile(prefix + ".pub")
    assert os.path.isfile(prefix + ".sec")
    fingerprint = capsys.readouterr().out.strip()
    assert len(fingerprint) == 16
    int(fingerprint, 16)


def test_seeded_keygen_repeats(workdir):
    contents = []
    for name in ("first", "second"):
        prefix = str(workdir / name)
        _run(
            ["keygen", "--curve", "toy-1019", "--encoding", "icart", "--output-prefix", prefix]
            + SEEDED
        )
        with open(prefix + ".sec") as secret:
            contents.append(secret.read())
    assert contents[0] == contents[1]


def test_encrypt_decrypt(workdir, keys):
    public, secret = keys
    ciphertext = str(workdir / "message.ct")
    recovered = str(workdir / "message.out")

    assert (
        _run(["encrypt", str(workdir / "message.bin"), "--public-key", public, "--output", ciphertext])
        == EXIT_SUCCESS
    )
    assert (
        _run(["decrypt", ciphertext, "--secret-key", secret, "--output", recovered])
        == EXIT_SUCCESS
    )
    with open(recovered, "rb") as recovered_file:
        assert recovered_file.read() == MESSAGE


@pytest.mark.parametrize(
    "codec, channel", [("rejection", "words.tsv"), ("uniform", "sixteen.tsv")]
)
def test_embed_extract(workdir, keys, codec, channel):
    public, secret = keys
    stegotext = str(workdir / "cover.txt")
    recovered = str(workdir / "message.out")
    channel = str(workdir / channel)

    assert (
        _run(
            [
                "embed",
                str(workdir / "message.bin"),
                "--public-key",
                public,
                "--channel",
                channel,
                "--codec",
                codec,
                "--output",
                stegotext,
            ]
        )
        == EXIT_SUCCESS
    )
    assert (
        _run(
            [
                "extract",
                stegotext,
                "--secret-key",
                secret,
                "--channel",
                channel,
                "--codec",
                codec,
                "--output",
                recovered,
            ]
        )
        == EXIT_SUCCESS
    )
    with open(recovered, "rb") as recovered_file:
        assert recovered_file.read() == MESSAGE


def test_seed_without_deterministic_mode(workdir, capsys):
    with pytest.raises(SystemExit) as excinfo:
        _run(
            [
                "keygen",
                "--curve",
                "toy-1019",
                "--encoding",
                "swu",
                "--output-prefix",
                str(workdir / "k"),
                "--seed",
                "7",
            ]
        )
    assert excinfo.value.code == EXIT_USAGE
    assert "--insecure-deterministic" in capsys.readouterr().err


def test_inapplicable_encoding(workdir):
    code = _run(
        [
            "keygen",
            "--curve",
            "secp256k1",
            "--encoding",
            "swu",
            "--output-prefix",
            str(workdir / "k"),
        ]
    )
    assert code == EXIT_DATA_ERROR
    assert not os.path.exists(str(workdir / "k.pub"))


def test_missing_channel(workdir, keys):
    public, _ = keys
    code = _run(
        [
            "embed",
            str(workdir / "message.bin"),
            "--public-key",
            public,
            "--channel",
            str(workdir / "nowhere.tsv"),
            "--output",
            str(workdir / "cover.txt"),
        ]
    )
    assert code == EXIT_DATA_ERROR


def test_unknown_codec(workdir, keys, capsys):
    public, _ = keys
    code = _run(
        [
            "embed",
            str(workdir / "message.bin"),
            "--public-key",
            public,
            "--channel",
            str(workdir / "words.tsv"),
            "--codec",
            "arithmetic",
            "--output",
            str(workdir / "cover.txt"),
        ]
    )
    assert code == EXIT_DATA_ERROR
    assert "arithmetic" in capsys.readouterr().err


def test_truncated_ciphertext(workdir, keys):
    public, secret = keys
    ciphertext = workdir / "message.ct"
    _run(["encrypt", str(workdir / "message.bin"), "--public-key", public, "--output", str(ciphertext)])
    ciphertext.write_bytes(ciphertext.read_bytes()[:3])

    code = _run(
        ["decrypt", str(ciphertext), "--secret-key", secret, "--output", str(workdir / "out")]
    )
    assert code == EXIT_DATA_ERROR


def test_wrong_key_does_not_recover_the_message(workdir, keys):
    public, _ = keys
    other = str(workdir / "mallory")
    _run(
        ["keygen", "--curve", "toy-1019", "--encoding", "swu", "--output-prefix", other]
        + ["--insecure-deterministic", "--seed", "8"]
    )
    ciphertext = str(workdir / "message.ct")
    recovered = workdir / "message.out"
    _run(["encrypt", str(workdir / "message.bin"), "--public-key", public, "--output", ciphertext])

    code = _run(
        ["decrypt", ciphertext, "--secret-key", other + ".sec", "--output", str(recovered)]
    )
    assert code in (EXIT_SUCCESS, EXIT_DATA_ERROR)
    if code == EXIT_SUCCESS:
        assert recovered.read_bytes() != MESSAGE


def test_randtest_fails_a_constant_file(workdir, capsys):
    constant = workdir / "zeros.bin"
    constant.write_bytes(bytes(4096))

    code = _run(["randtest", "--input", str(constant), "--streams", "10"])

    assert code == EXIT_STATISTICAL_FAILURE
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "SUMMARY" in out


def test_randtest_on_generated_ciphertext(capsys):
    code = _run(
        [
            "randtest",
            "--generate",
            "--curve",
            "toy-1019",
            "--encoding",
            "icart",
            "--bits",
            "20480",
            "--streams",
            "10",
        ]
        + SEEDED
    )
    summary = capsys.readouterr().out.splitlines()[-1]
    assert summary.startswith("SUMMARY\t")
    if summary.endswith("\tPASS"):
        assert code == EXIT_SUCCESS
    else:
        assert code == EXIT_STATISTICAL_FAILURE


@pytest.mark.slow
@pytest.mark.parametrize(
    "instance",
    [
        ["--generate", "--curve", "p384", "--encoding", "icart"],
        ["--generate", "--curve", "secp256k1", "--encoding", "sw"],
        ["--generate", "--curve", "p256", "--encoding", "swu"],
        ["--combined"],
    ],
)
def test_deployed_ciphertext_passes_randtest(instance, capsys):
    code = _run(
        ["randtest"]
        + instance
        + ["--bits", "1000000", "--streams", "100"]
        + SEEDED
    )
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "SUMMARY\t9/9\tPASS"
    assert code == EXIT_SUCCESS


@pytest.mark.slow
def test_selftest(capsys):
    code = _run(["selftest", "--samples", "20000"] + SEEDED)
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("SUMMARY\t")
    assert [line for line in lines if not line.endswith("\tPASS")] == []
    assert code == EXIT_SUCCESS
