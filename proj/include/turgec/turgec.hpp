#pragma once

// Umbrella header.

#include "turgec/config.hpp"
#include "turgec/corrector.hpp"
#include "turgec/lexicon.hpp"
#include "turgec/lexicon_data.hpp"
#include "turgec/m2.hpp"
#include "turgec/morphology.hpp"
#include "turgec/pipeline.hpp"
#include "turgec/rng.hpp"
#include "turgec/rules.hpp"
#include "turgec/scoring.hpp"
#include "turgec/text.hpp"
