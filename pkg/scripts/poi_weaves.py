"""Run the poi ground pattern and the 3- and 5-weaves through the spin state machine."""

from jugglestate.poi import GROUND_LEFT_UP, entry_state, find_entry, run_word, word_orbit

EXITS = {"RRB": "RRR", "BRRBB": "BRRBR"}


def show(word):
    entry = find_entry(word)
    start = entry_state(word)
    orbit = word_orbit(start, word)
    print(f"{word}: entry ({entry or '-'}), steady cycle of {len(orbit)} beats")
    print("  crossings along the cycle:", " ".join(str(s.crossing_count) for s in orbit))
    if word in EXITS:
        full = entry + word + EXITS[word]
        final, traj = run_word(GROUND_LEFT_UP, full)
        print(f"  ({entry}){word}({EXITS[word]}) from ground ends at {final}"
              f"{' - ground' if final.is_ground else ''}")
        print("  crossings:", " ".join(str(s.crossing_count) for s in traj))


def main():
    for word in ["BB", "RRB", "BRRBB"]:
        show(word)


if __name__ == "__main__":
    main()
