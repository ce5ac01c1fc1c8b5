#pragma once

#include "udpolar/error.hpp"
#include "udpolar/polarity.hpp"
#include "udpolar/text.hpp"
#include "udpolar/conllu.hpp"
#include "udpolar/hierarchy.hpp"
#include "udpolar/binary_tree.hpp"
#include "udpolar/binarizer.hpp"
#include "udpolar/building_blocks.hpp"
#include "udpolar/lexicon.hpp"
#include "udpolar/polarizer.hpp"
#include "udpolar/pipeline.hpp"
#include "udpolar/render.hpp"
#include "udpolar/evaluator.hpp"
