"""Cross-checks ilx Turtle output with rdflib (a second, unrelated parser)."""
import subprocess
import sys

import rdflib
from rdflib.namespace import OWL, RDF

ILX, FIXTURES = sys.argv[1], sys.argv[2]
IM = rdflib.Namespace("http://ns.inria.fr/ulk/2011/06/10/ileximon-core#")


def run(*args):
    return subprocess.run([ILX, *args], check=True, capture_output=True, text=True).stdout


def parse(text):
    g = rdflib.Graph()
    g.parse(data=text, format="turtle")
    return g


lex = parse(run("export", f"{FIXTURES}/ilexicon.ilx"))
checks = {
    "classes": (len(set(lex.subjects(RDF.type, IM.ILexicalUnit))), 13),
    "relations": (len(set(lex.subjects(RDF.type, IM.ISemRelation))), 13),
    "chains": (len(set(lex.subjects(OWL.propertyChainAxiom, None))), 3),
    "slots": (len(set(lex.subjects(RDF.type, IM.ILexicalPrimitive))), 9),
}
meta = parse(run("export", "--meta"))
checks["meta classes"] = (len(set(meta.subjects(RDF.type, OWL.Class))), 3)
graphs = parse(run("infer", f"{FIXTURES}/ilexicon.ilx", f"{FIXTURES}/graphs.ilx"))
checks["graph nodes typed"] = (len(set(graphs.subjects(RDF.type, None))) > 0, True)

failed = [f"{k}: got {got}, want {want}" for k, (got, want) in checks.items() if got != want]
print("\n".join(failed) or f"rdflib: {len(lex)} lexicon triples, all checks passed")
sys.exit(1 if failed else 0)
