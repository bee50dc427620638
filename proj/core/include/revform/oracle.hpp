#pragma once

#include "revform/formula.hpp"
#include "revform/word.hpp"

namespace revform {

// Brute-force decision procedure for short words: every variable ranges over
// every distinct nonempty factor of w (or of reverse(w), for a variable that
// only ever appears mirrored). Shares no code with EncounterEngine.
bool oracle_encounters(const Word& w, const Formula& f);

}  // namespace revform
