/*
 * Copyright 2026 The PEET Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "peet/align.hpp"
#include "peet/annotate.hpp"
#include "peet/classify.hpp"
#include "peet/corpus_io.hpp"
#include "peet/errors.hpp"
#include "peet/features.hpp"
#include "peet/gec_metrics.hpp"
#include "peet/lexicon.hpp"
#include "peet/model.hpp"
#include "peet/ranking.hpp"
#include "peet/service.hpp"
