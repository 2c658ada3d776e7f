#pragma once

#include "ontologik/aor.hpp"
#include "ontologik/canonical.hpp"
#include "ontologik/confirm.hpp"
#include "ontologik/error.hpp"
#include "ontologik/lexicon.hpp"
#include "ontologik/logform.hpp"
#include "ontologik/nlparser.hpp"
#include "ontologik/ontology.hpp"
#include "ontologik/unifier.hpp"
