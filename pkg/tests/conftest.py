import json
import shutil
from pathlib import Path

import pytest

from pairlex.classify import classify_all
from pairlex.config import BuildConfig
from pairlex.loader import load_lexicon, validate
from pairlex.pipeline import run_build, write_output

SEED_DIR = Path(__file__).resolve().parent.parent / "data" / "seed"


@pytest.fixture(scope="session")
def model():
    model, diagnostics = load_lexicon(SEED_DIR)
    assert diagnostics == []
    assert validate(model) == []
    return model


@pytest.fixture(scope="session")
def graph(model):
    return classify_all(model)


@pytest.fixture(scope="session")
def build(model):
    return run_build(model, BuildConfig(input_dir=str(SEED_DIR)))


@pytest.fixture(scope="session")
def pages_by_slug(build):
    return {page.slug: page for page in build.pages}


@pytest.fixture(scope="session")
def out_tree(build, tmp_path_factory):
    out = tmp_path_factory.mktemp("tree") / "out"
    write_output(build, out)
    return out


@pytest.fixture()
def seed_copy(tmp_path):
    """Writable copy of the seed for mutation tests."""
    target = tmp_path / "seed"
    shutil.copytree(SEED_DIR, target)
    return target


def rewrite_json(path: Path, mutate):
    data = json.loads(path.read_text(encoding="utf-8"))
    mutate(data)
    path.write_text(json.dumps(data, ensure_ascii=False, indent=2), encoding="utf-8")


def make_cyclic_seed(tmp_path: Path) -> Path:
    """Adversarial fixture: secondary senses loop back between lexemes."""
    seed = tmp_path / "cyclic"
    (seed / "lexemes").mkdir(parents=True)

    def sense(sid, rank):
        return {
            "id": sid,
            "rank": rank,
            "gloss_ru": f"значение {sid}",
            "gloss_bg": f"значение {sid}",
            "ted": {"top": "deforming"},
            "ir": {"ru": "изменен", "bg": "променен"},
        }

    lexemes = [
        ("xx", "хх", "ru", [sense("xx-1", 1), sense("xx-2", 2)]),
        ("yy", "уу", "bg", [sense("yy-1", 1), sense("yy-2", 2)]),
        ("zz", "зз", "bg", [sense("zz-1", 1), sense("zz-2", 2)]),
    ]
    for lid, lemma, lang, senses in lexemes:
        (seed / "lexemes" / f"{lid}.json").write_text(
            json.dumps(
                {"id": lid, "lemma": lemma, "language": lang, "pos": "verb",
                 "senses": senses},
                ensure_ascii=False,
            ),
            encoding="utf-8",
        )
    (seed / "pairs.json").write_text(
        json.dumps(
            [
                {"ru": "xx-1", "bg": "yy-1"},
                {"ru": "xx-2", "bg": "zz-1"},
                {"ru": "xx-2", "bg": "zz-2"},
            ],
            ensure_ascii=False,
        ),
        encoding="utf-8",
    )
    (seed / "links.json").write_text("{}", encoding="utf-8")
    return seed
