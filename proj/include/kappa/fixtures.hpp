#pragma once

#include <string>
#include <vector>

#include "kappa/smash.hpp"

namespace kappa {

/// A transcription of one published commutator table, used only as a
/// comparison target — never as an input to the derivation.  Entries where
/// the transcription was corrected carry an annotation describing the
/// suspected misprint and what fixes the value.
struct Fixture {
    std::string id;
    SmashConfig config;
    CommutatorSet comms;
    std::map<std::string, std::string> annotations;
};

/// Built-in fixture ids: bicross-xp, bicross-px, standard-xp, standard-px,
/// plus the sign-flipped variants bicross-{xp,px}-metric-flipped and
/// bicross-{xp,px}-transposed.
std::vector<std::string> fixture_ids();

const Fixture& fixture_by_id(const std::string& id);

/// Fixture covering the given configuration; throws MissingFixtureError when
/// none exists (e.g. standard basis with flipped metric).  Set the
/// KAPPA_FIXTURES_DIR environment variable to a directory of <id>.json files
/// to override the built-in tables.
const Fixture& fixture_for(const SmashConfig& cfg);

} // namespace kappa
