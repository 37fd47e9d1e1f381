"""Regenerate the shipped corpus files in place."""

from skeincat.corpus import corpus_dir, write_corpus

if __name__ == "__main__":
    for path in write_corpus(corpus_dir()):
        print(path)
