#ifndef GRAMMIC_GRAMMIC_HPP_
#define GRAMMIC_GRAMMIC_HPP_

#include "grammic/errors.hpp"
#include "grammic/word.hpp"
#include "grammic/tableau.hpp"
#include "grammic/tropical.hpp"
#include "grammic/action.hpp"
#include "grammic/relations.hpp"
#include "grammic/identities.hpp"
#include "grammic/shiftgraph.hpp"
#include "grammic/serialize.hpp"
#include "grammic/verify.hpp"

#endif  // GRAMMIC_GRAMMIC_HPP_
