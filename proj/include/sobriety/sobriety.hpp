#pragma once

#include "sobriety/poset.hpp"
#include "sobriety/omega.hpp"
#include "sobriety/topology.hpp"
#include "sobriety/classify.hpp"
#include "sobriety/chain_product.hpp"
#include "sobriety/constructions.hpp"
#include "sobriety/catalog.hpp"
#include "sobriety/witnesses.hpp"
#include "sobriety/io.hpp"
#include "sobriety/corpus.hpp"
#include "sobriety/propcheck.hpp"
