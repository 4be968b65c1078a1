// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Every example must keep running against the current API.

macro_rules! example {
    ($test:ident, $module:ident, $file:literal) => {
        #[path = $file]
        mod $module;

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(generate_graph_runs, generate_graph, "../examples/generate_graph.rs");
example!(analyze_topology_runs, analyze_topology, "../examples/analyze_topology.rs");
example!(fit_power_law_runs, fit_power_law, "../examples/fit_power_law.rs");
example!(theory_predictions_runs, theory_predictions, "../examples/theory_predictions.rs");
example!(compare_models_runs, compare_models, "../examples/compare_models.rs");
example!(replicate_experiment_runs, replicate_experiment, "../examples/replicate_experiment.rs");
