// Generated by scripts/embed-fixtures.mjs from fixtures/*.json; do not edit.
import type {
  ErrorEnvelope,
  HealthResponse,
  HeatmapCollection,
  RouteResponse,
  SimStartResponse,
  TemporalResponse,
  TickEntry,
  TripCreateResponse,
  TripStatusResponse,
} from "./types.js";

export const FIXTURES: {
  congestion: HeatmapCollection;
  congestion_empty: ErrorEnvelope;
  health: HealthResponse;
  route_noroute: ErrorEnvelope;
  route_ok: RouteResponse;
  route_same: RouteResponse;
  sim_start: SimStartResponse;
  temporal: TemporalResponse;
  trip_create: TripCreateResponse;
  trip_initial: TripStatusResponse;
  trip_ticks: { tick: TickEntry; trip: TripStatusResponse }[];
} = {
  congestion: {
  "features": [
    {
      "geometry": {
        "coordinates": [
          [
            [
              -74.0375,
              40.6875
            ],
            [
              -73.99374999999999,
              40.6875
            ],
            [
              -73.99374999999999,
              40.71875
            ],
            [
              -74.0375,
              40.71875
            ],
            [
              -74.0375,
              40.6875
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 6,
        "row": 6,
        "value": 4.882640374147589
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -74.0375,
              40.71875
            ],
            [
              -73.99374999999999,
              40.71875
            ],
            [
              -73.99374999999999,
              40.75
            ],
            [
              -74.0375,
              40.75
            ],
            [
              -74.0375,
              40.71875
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 6,
        "row": 7,
        "value": 4.714642085415032
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -73.99374999999999,
              40.71875
            ],
            [
              -73.94999999999999,
              40.71875
            ],
            [
              -73.94999999999999,
              40.75
            ],
            [
              -73.99374999999999,
              40.75
            ],
            [
              -73.99374999999999,
              40.71875
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 7,
        "row": 7,
        "value": 4.586320159012044
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -74.0375,
              40.75
            ],
            [
              -73.99374999999999,
              40.75
            ],
            [
              -73.99374999999999,
              40.78125
            ],
            [
              -74.0375,
              40.78125
            ],
            [
              -74.0375,
              40.75
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 6,
        "row": 8,
        "value": 4.87041514322487
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -73.99374999999999,
              40.75
            ],
            [
              -73.94999999999999,
              40.75
            ],
            [
              -73.94999999999999,
              40.78125
            ],
            [
              -73.99374999999999,
              40.78125
            ],
            [
              -73.99374999999999,
              40.75
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 7,
        "row": 8,
        "value": 4.756845575726272
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -73.94999999999999,
              40.75
            ],
            [
              -73.90624999999999,
              40.75
            ],
            [
              -73.90624999999999,
              40.78125
            ],
            [
              -73.94999999999999,
              40.78125
            ],
            [
              -73.94999999999999,
              40.75
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 8,
        "row": 8,
        "value": 4.836334482610762
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -73.90625,
              40.75
            ],
            [
              -73.8625,
              40.75
            ],
            [
              -73.8625,
              40.78125
            ],
            [
              -73.90625,
              40.78125
            ],
            [
              -73.90625,
              40.75
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 9,
        "row": 8,
        "value": 4.95232344272895
      },
      "type": "Feature"
    },
    {
      "geometry": {
        "coordinates": [
          [
            [
              -73.99374999999999,
              40.78125
            ],
            [
              -73.94999999999999,
              40.78125
            ],
            [
              -73.94999999999999,
              40.8125
            ],
            [
              -73.99374999999999,
              40.8125
            ],
            [
              -73.99374999999999,
              40.78125
            ]
          ]
        ],
        "type": "Polygon"
      },
      "properties": {
        "col": 7,
        "row": 9,
        "value": 4.5157258325050895
      },
      "type": "Feature"
    }
  ],
  "type": "FeatureCollection"
},
  congestion_empty: {
  "code": "EMPTY_BIN",
  "details": {},
  "message": "no congestion cells for day=2 hour=8"
},
  health: {
  "analytics_loaded": true,
  "graph_edges": 8,
  "graph_nodes": 4,
  "model_loaded": false,
  "scenario_loaded": false,
  "snapshot_version": 1,
  "status": "ok"
},
  route_noroute: {
  "code": "NO_ROUTE",
  "details": {
    "crow_flight_m": 6975.955504541164,
    "dest_node": "A",
    "origin_node": "C",
    "settled": 1
  },
  "message": "no route from C to A"
},
  route_ok: {
  "cost_sec": 600.0,
  "crow_flight_m": 1377.6873624678042,
  "dest_node": "T",
  "distance_m": 6000.0,
  "geometry": [
    [
      40.7,
      -74.0
    ],
    [
      40.71,
      -74.0
    ],
    [
      40.71,
      -73.99
    ]
  ],
  "nodes": [
    "S",
    "A",
    "T"
  ],
  "origin_node": "S",
  "snapshot_version": 1
},
  route_same: {
  "cost_sec": 0.0,
  "crow_flight_m": 0.0,
  "dest_node": "S",
  "distance_m": 0.0,
  "geometry": [
    [
      40.7,
      -74.0
    ]
  ],
  "nodes": [
    "S"
  ],
  "origin_node": "S",
  "snapshot_version": 1
},
  sim_start: {
  "events": 2,
  "ok": true,
  "poll_interval": 30.0,
  "snapshot_version": 1
},
  temporal: {
  "bins": [
    {
      "count": 29,
      "day": 0,
      "hour": 0,
      "index": 2.4178665126768264
    },
    {
      "count": 34,
      "day": 0,
      "hour": 1,
      "index": 2.410552591051374
    },
    {
      "count": 35,
      "day": 0,
      "hour": 2,
      "index": 2.383279272899808
    },
    {
      "count": 30,
      "day": 0,
      "hour": 3,
      "index": 2.3898338622566757
    },
    {
      "count": 24,
      "day": 0,
      "hour": 4,
      "index": 2.488944108402101
    },
    {
      "count": 21,
      "day": 0,
      "hour": 5,
      "index": 2.3295957055621206
    },
    {
      "count": 126,
      "day": 0,
      "hour": 6,
      "index": 3.6021795049692336
    },
    {
      "count": 191,
      "day": 0,
      "hour": 7,
      "index": 4.763965603451587
    },
    {
      "count": 192,
      "day": 0,
      "hour": 8,
      "index": 4.828886228166019
    },
    {
      "count": 179,
      "day": 0,
      "hour": 9,
      "index": 4.818883250226778
    },
    {
      "count": 108,
      "day": 0,
      "hour": 10,
      "index": 3.5748560694336873
    },
    {
      "count": 84,
      "day": 0,
      "hour": 11,
      "index": 3.009740858242864
    },
    {
      "count": 94,
      "day": 0,
      "hour": 12,
      "index": 3.0352036437882397
    },
    {
      "count": 105,
      "day": 0,
      "hour": 13,
      "index": 3.026352144122895
    },
    {
      "count": 108,
      "day": 0,
      "hour": 14,
      "index": 3.0079855589729783
    },
    {
      "count": 85,
      "day": 0,
      "hour": 15,
      "index": 2.9875879571459207
    },
    {
      "count": 117,
      "day": 0,
      "hour": 16,
      "index": 3.632588309607484
    },
    {
      "count": 196,
      "day": 0,
      "hour": 17,
      "index": 4.7753714841211705
    },
    {
      "count": 190,
      "day": 0,
      "hour": 18,
      "index": 4.810202528515047
    },
    {
      "count": 180,
      "day": 0,
      "hour": 19,
      "index": 4.7877865380543625
    },
    {
      "count": 112,
      "day": 0,
      "hour": 20,
      "index": 3.595481694072347
    },
    {
      "count": 109,
      "day": 0,
      "hour": 21,
      "index": 3.029454503682541
    },
    {
      "count": 78,
      "day": 0,
      "hour": 22,
      "index": 2.9996166258827746
    },
    {
      "count": 80,
      "day": 0,
      "hour": 23,
      "index": 2.9658335773908346
    },
    {
      "count": 23,
      "day": 1,
      "hour": 0,
      "index": 2.3523250681969596
    },
    {
      "count": 30,
      "day": 1,
      "hour": 1,
      "index": 2.4070488956366836
    },
    {
      "count": 28,
      "day": 1,
      "hour": 2,
      "index": 2.328604066499877
    },
    {
      "count": 30,
      "day": 1,
      "hour": 3,
      "index": 2.3983672291657814
    },
    {
      "count": 33,
      "day": 1,
      "hour": 4,
      "index": 2.4455906123069364
    },
    {
      "count": 18,
      "day": 1,
      "hour": 5,
      "index": 2.4770697263245918
    },
    {
      "count": 134,
      "day": 1,
      "hour": 6,
      "index": 3.5919380164867305
    },
    {
      "count": 186,
      "day": 1,
      "hour": 7,
      "index": 4.81536483739803
    },
    {
      "count": 190,
      "day": 1,
      "hour": 8,
      "index": 4.799032256359025
    },
    {
      "count": 212,
      "day": 1,
      "hour": 9,
      "index": 4.75997519477785
    },
    {
      "count": 129,
      "day": 1,
      "hour": 10,
      "index": 3.6443797499984396
    },
    {
      "count": 78,
      "day": 1,
      "hour": 11,
      "index": 3.01722519811161
    },
    {
      "count": 103,
      "day": 1,
      "hour": 12,
      "index": 3.029473966654193
    },
    {
      "count": 109,
      "day": 1,
      "hour": 13,
      "index": 3.013968949158156
    },
    {
      "count": 99,
      "day": 1,
      "hour": 14,
      "index": 2.98145388987975
    },
    {
      "count": 87,
      "day": 1,
      "hour": 15,
      "index": 3.030952987217648
    },
    {
      "count": 133,
      "day": 1,
      "hour": 16,
      "index": 3.5908143170379327
    },
    {
      "count": 198,
      "day": 1,
      "hour": 17,
      "index": 4.775760336673855
    },
    {
      "count": 218,
      "day": 1,
      "hour": 18,
      "index": 4.732708997494449
    },
    {
      "count": 210,
      "day": 1,
      "hour": 19,
      "index": 4.799182086760711
    },
    {
      "count": 122,
      "day": 1,
      "hour": 20,
      "index": 3.656201728941871
    },
    {
      "count": 121,
      "day": 1,
      "hour": 21,
      "index": 3.0088224378245965
    },
    {
      "count": 111,
      "day": 1,
      "hour": 22,
      "index": 2.9918187651419146
    },
    {
      "count": 91,
      "day": 1,
      "hour": 23,
      "index": 3.0203049716264014
    },
    {
      "count": 38,
      "day": 2,
      "hour": 0,
      "index": 2.4408743967357416
    },
    {
      "count": 27,
      "day": 2,
      "hour": 1,
      "index": 2.479778064470431
    },
    {
      "count": 26,
      "day": 2,
      "hour": 2,
      "index": 2.4046300101941616
    },
    {
      "count": 29,
      "day": 2,
      "hour": 3,
      "index": 2.4214242311040577
    },
    {
      "count": 35,
      "day": 2,
      "hour": 4,
      "index": 2.4063799380584934
    },
    {
      "count": 33,
      "day": 2,
      "hour": 5,
      "index": 2.3383748817863155
    },
    {
      "count": 136,
      "day": 2,
      "hour": 6,
      "index": 3.5532201796688025
    },
    {
      "count": 232,
      "day": 2,
      "hour": 7,
      "index": 4.785266115788548
    },
    {
      "count": 210,
      "day": 2,
      "hour": 8,
      "index": 4.832128871608393
    },
    {
      "count": 217,
      "day": 2,
      "hour": 9,
      "index": 4.8482946603077455
    },
    {
      "count": 123,
      "day": 2,
      "hour": 10,
      "index": 3.58021753524447
    },
    {
      "count": 93,
      "day": 2,
      "hour": 11,
      "index": 3.0164526528253335
    },
    {
      "count": 97,
      "day": 2,
      "hour": 12,
      "index": 2.961318162913077
    },
    {
      "count": 105,
      "day": 2,
      "hour": 13,
      "index": 2.9929304394902694
    },
    {
      "count": 115,
      "day": 2,
      "hour": 14,
      "index": 3.0161281963060684
    },
    {
      "count": 92,
      "day": 2,
      "hour": 15,
      "index": 2.989729185622953
    },
    {
      "count": 134,
      "day": 2,
      "hour": 16,
      "index": 3.6148683037059355
    },
    {
      "count": 190,
      "day": 2,
      "hour": 17,
      "index": 4.835019716194938
    },
    {
      "count": 231,
      "day": 2,
      "hour": 18,
      "index": 4.827833369087009
    },
    {
      "count": 189,
      "day": 2,
      "hour": 19,
      "index": 4.786766687496556
    },
    {
      "count": 143,
      "day": 2,
      "hour": 20,
      "index": 3.6546462017524646
    },
    {
      "count": 141,
      "day": 2,
      "hour": 21,
      "index": 3.0425648542311348
    },
    {
      "count": 97,
      "day": 2,
      "hour": 22,
      "index": 2.968712575048612
    },
    {
      "count": 68,
      "day": 2,
      "hour": 23,
      "index": 2.9602275307853447
    },
    {
      "count": 36,
      "day": 3,
      "hour": 0,
      "index": 2.3471549561206158
    },
    {
      "count": 35,
      "day": 3,
      "hour": 1,
      "index": 2.412660112637429
    },
    {
      "count": 37,
      "day": 3,
      "hour": 2,
      "index": 2.458463330718848
    },
    {
      "count": 26,
      "day": 3,
      "hour": 3,
      "index": 2.3899319395915533
    },
    {
      "count": 37,
      "day": 3,
      "hour": 4,
      "index": 2.326381264310236
    },
    {
      "count": 29,
      "day": 3,
      "hour": 5,
      "index": 2.3855230665011713
    },
    {
      "count": 147,
      "day": 3,
      "hour": 6,
      "index": 3.6135730917066926
    },
    {
      "count": 268,
      "day": 3,
      "hour": 7,
      "index": 4.80039466794603
    },
    {
      "count": 278,
      "day": 3,
      "hour": 8,
      "index": 4.767673901048481
    },
    {
      "count": 275,
      "day": 3,
      "hour": 9,
      "index": 4.7679232461522245
    },
    {
      "count": 164,
      "day": 3,
      "hour": 10,
      "index": 3.540741462738816
    },
    {
      "count": 120,
      "day": 3,
      "hour": 11,
      "index": 3.013601706344964
    },
    {
      "count": 117,
      "day": 3,
      "hour": 12,
      "index": 2.9605457334438006
    },
    {
      "count": 121,
      "day": 3,
      "hour": 13,
      "index": 3.0038949795255747
    },
    {
      "count": 107,
      "day": 3,
      "hour": 14,
      "index": 3.005763110320072
    },
    {
      "count": 115,
      "day": 3,
      "hour": 15,
      "index": 3.0259116583679706
    },
    {
      "count": 155,
      "day": 3,
      "hour": 16,
      "index": 3.6078872667458812
    },
    {
      "count": 266,
      "day": 3,
      "hour": 17,
      "index": 4.773434394929811
    },
    {
      "count": 241,
      "day": 3,
      "hour": 18,
      "index": 4.7752943719470435
    },
    {
      "count": 235,
      "day": 3,
      "hour": 19,
      "index": 4.809726969097062
    },
    {
      "count": 154,
      "day": 3,
      "hour": 20,
      "index": 3.545895805624454
    },
    {
      "count": 182,
      "day": 3,
      "hour": 21,
      "index": 2.989968551726151
    },
    {
      "count": 110,
      "day": 3,
      "hour": 22,
      "index": 2.9735708077458685
    },
    {
      "count": 95,
      "day": 3,
      "hour": 23,
      "index": 2.927438217206614
    },
    {
      "count": 33,
      "day": 4,
      "hour": 0,
      "index": 2.4911616052726284
    },
    {
      "count": 40,
      "day": 4,
      "hour": 1,
      "index": 2.4266305165154596
    },
    {
      "count": 35,
      "day": 4,
      "hour": 2,
      "index": 2.42889908388502
    },
    {
      "count": 34,
      "day": 4,
      "hour": 3,
      "index": 2.4720454966332333
    },
    {
      "count": 39,
      "day": 4,
      "hour": 4,
      "index": 2.446314304971733
    },
    {
      "count": 43,
      "day": 4,
      "hour": 5,
      "index": 2.3995564276505066
    },
    {
      "count": 171,
      "day": 4,
      "hour": 6,
      "index": 3.6044644886254957
    },
    {
      "count": 279,
      "day": 4,
      "hour": 7,
      "index": 4.816779769618219
    },
    {
      "count": 249,
      "day": 4,
      "hour": 8,
      "index": 4.782959421794302
    },
    {
      "count": 257,
      "day": 4,
      "hour": 9,
      "index": 4.800152413920391
    },
    {
      "count": 183,
      "day": 4,
      "hour": 10,
      "index": 3.6009022037433813
    },
    {
      "count": 124,
      "day": 4,
      "hour": 11,
      "index": 2.9905347309293195
    },
    {
      "count": 130,
      "day": 4,
      "hour": 12,
      "index": 2.9986995052116225
    },
    {
      "count": 107,
      "day": 4,
      "hour": 13,
      "index": 3.010755795104353
    },
    {
      "count": 99,
      "day": 4,
      "hour": 14,
      "index": 2.9933951645353356
    },
    {
      "count": 116,
      "day": 4,
      "hour": 15,
      "index": 2.9722343847693615
    },
    {
      "count": 168,
      "day": 4,
      "hour": 16,
      "index": 3.6003653465466914
    },
    {
      "count": 277,
      "day": 4,
      "hour": 17,
      "index": 4.848012736680678
    },
    {
      "count": 273,
      "day": 4,
      "hour": 18,
      "index": 4.760296537373377
    },
    {
      "count": 254,
      "day": 4,
      "hour": 19,
      "index": 4.776727347834412
    },
    {
      "count": 181,
      "day": 4,
      "hour": 20,
      "index": 3.6252132166066566
    },
    {
      "count": 174,
      "day": 4,
      "hour": 21,
      "index": 2.9912823920408327
    },
    {
      "count": 101,
      "day": 4,
      "hour": 22,
      "index": 2.9639385750097165
    },
    {
      "count": 111,
      "day": 4,
      "hour": 23,
      "index": 3.006919161962612
    },
    {
      "count": 24,
      "day": 5,
      "hour": 0,
      "index": 2.4299697256083896
    },
    {
      "count": 29,
      "day": 5,
      "hour": 1,
      "index": 2.449723165605964
    },
    {
      "count": 27,
      "day": 5,
      "hour": 2,
      "index": 2.3955640940563008
    },
    {
      "count": 20,
      "day": 5,
      "hour": 3,
      "index": 2.3031979721241695
    },
    {
      "count": 38,
      "day": 5,
      "hour": 4,
      "index": 2.429059705886108
    },
    {
      "count": 23,
      "day": 5,
      "hour": 5,
      "index": 2.380756315572814
    },
    {
      "count": 128,
      "day": 5,
      "hour": 6,
      "index": 2.9603499844370744
    },
    {
      "count": 228,
      "day": 5,
      "hour": 7,
      "index": 3.0186005850192252
    },
    {
      "count": 226,
      "day": 5,
      "hour": 8,
      "index": 2.9656252766331352
    },
    {
      "count": 219,
      "day": 5,
      "hour": 9,
      "index": 3.0008617844786856
    },
    {
      "count": 130,
      "day": 5,
      "hour": 10,
      "index": 2.997648234547807
    },
    {
      "count": 115,
      "day": 5,
      "hour": 11,
      "index": 3.2121890952046424
    },
    {
      "count": 98,
      "day": 5,
      "hour": 12,
      "index": 3.23355028817883
    },
    {
      "count": 86,
      "day": 5,
      "hour": 13,
      "index": 3.1618868229408545
    },
    {
      "count": 102,
      "day": 5,
      "hour": 14,
      "index": 3.2141246440785367
    },
    {
      "count": 100,
      "day": 5,
      "hour": 15,
      "index": 3.1970352992085833
    },
    {
      "count": 128,
      "day": 5,
      "hour": 16,
      "index": 3.018319511713832
    },
    {
      "count": 237,
      "day": 5,
      "hour": 17,
      "index": 3.007047901663133
    },
    {
      "count": 231,
      "day": 5,
      "hour": 18,
      "index": 3.019686812490694
    },
    {
      "count": 219,
      "day": 5,
      "hour": 19,
      "index": 3.0080203236290775
    },
    {
      "count": 127,
      "day": 5,
      "hour": 20,
      "index": 3.0099710919275036
    },
    {
      "count": 144,
      "day": 5,
      "hour": 21,
      "index": 3.0132292022106415
    },
    {
      "count": 106,
      "day": 5,
      "hour": 22,
      "index": 3.054646034704297
    },
    {
      "count": 97,
      "day": 5,
      "hour": 23,
      "index": 2.9648534322314553
    },
    {
      "count": 15,
      "day": 6,
      "hour": 0,
      "index": 2.446079898904789
    },
    {
      "count": 10,
      "day": 6,
      "hour": 1,
      "index": 2.339601105063594
    },
    {
      "count": 21,
      "day": 6,
      "hour": 2,
      "index": 2.391104759928264
    },
    {
      "count": 28,
      "day": 6,
      "hour": 3,
      "index": 2.4244148777920658
    },
    {
      "count": 19,
      "day": 6,
      "hour": 4,
      "index": 2.4483267131579245
    },
    {
      "count": 18,
      "day": 6,
      "hour": 5,
      "index": 2.3189070895601454
    },
    {
      "count": 76,
      "day": 6,
      "hour": 6,
      "index": 3.0014353639755686
    },
    {
      "count": 142,
      "day": 6,
      "hour": 7,
      "index": 3.008047228179967
    },
    {
      "count": 118,
      "day": 6,
      "hour": 8,
      "index": 2.984379211771095
    },
    {
      "count": 124,
      "day": 6,
      "hour": 9,
      "index": 3.0090414837613078
    },
    {
      "count": 89,
      "day": 6,
      "hour": 10,
      "index": 3.0028107649110978
    },
    {
      "count": 52,
      "day": 6,
      "hour": 11,
      "index": 3.207865547946212
    },
    {
      "count": 56,
      "day": 6,
      "hour": 12,
      "index": 3.2566921579022616
    },
    {
      "count": 56,
      "day": 6,
      "hour": 13,
      "index": 3.170299460630382
    },
    {
      "count": 56,
      "day": 6,
      "hour": 14,
      "index": 3.2404618925486752
    },
    {
      "count": 57,
      "day": 6,
      "hour": 15,
      "index": 3.1138235259904845
    },
    {
      "count": 97,
      "day": 6,
      "hour": 16,
      "index": 2.9964813213494272
    },
    {
      "count": 152,
      "day": 6,
      "hour": 17,
      "index": 3.0353059444860224
    },
    {
      "count": 123,
      "day": 6,
      "hour": 18,
      "index": 2.9980568046509877
    },
    {
      "count": 137,
      "day": 6,
      "hour": 19,
      "index": 2.9858957902437737
    },
    {
      "count": 88,
      "day": 6,
      "hour": 20,
      "index": 3.036041707726834
    },
    {
      "count": 98,
      "day": 6,
      "hour": 21,
      "index": 2.9613159930437285
    },
    {
      "count": 53,
      "day": 6,
      "hour": 22,
      "index": 2.993202063710582
    },
    {
      "count": 55,
      "day": 6,
      "hour": 23,
      "index": 2.9339206964177458
    }
  ]
},
  trip_create: {
  "predicted_eta": 600.0,
  "route": {
    "cost_sec": 600.0,
    "distance_m": 6000.0,
    "geometry": [
      [
        40.7,
        -74.0
      ],
      [
        40.71,
        -74.0
      ],
      [
        40.71,
        -73.99
      ]
    ],
    "nodes": [
      "S",
      "A",
      "T"
    ],
    "snapshot_version": 1
  },
  "trip_id": "t1"
},
  trip_initial: {
  "destination": "T",
  "last_deviation": null,
  "live_eta": 600.0,
  "position_node": "S",
  "predicted_eta": 600.0,
  "predicted_remaining": 600.0,
  "realized_sec": 0.0,
  "reroutes": 0,
  "route": {
    "cost_sec": 600.0,
    "geometry": [
      [
        40.7,
        -74.0
      ],
      [
        40.71,
        -74.0
      ],
      [
        40.71,
        -73.99
      ]
    ],
    "nodes": [
      "S",
      "A",
      "T"
    ],
    "snapshot_version": 1
  },
  "snapshot_version": 1,
  "started_at": 0.0,
  "status": "active",
  "trip_id": "t1"
},
  trip_ticks: [
  {
    "tick": {
      "arrivals": [],
      "clock": 30.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 600.0,
          "predicted_eta": 600.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 1,
      "tick": 1
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 600.0,
        "predicted_eta": 600.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 600.0,
      "position_node": "S",
      "predicted_eta": 600.0,
      "predicted_remaining": 600.0,
      "realized_sec": 30.0,
      "reroutes": 0,
      "route": {
        "cost_sec": 600.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.71,
            -74.0
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "A",
          "T"
        ],
        "snapshot_version": 1
      },
      "snapshot_version": 1,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 60.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 600.0,
          "predicted_eta": 600.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 1,
      "tick": 2
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 600.0,
        "predicted_eta": 600.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 600.0,
      "position_node": "S",
      "predicted_eta": 600.0,
      "predicted_remaining": 600.0,
      "realized_sec": 60.0,
      "reroutes": 0,
      "route": {
        "cost_sec": 600.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.71,
            -74.0
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "A",
          "T"
        ],
        "snapshot_version": 1
      },
      "snapshot_version": 1,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 90.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 600.0,
          "predicted_eta": 600.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 1,
      "tick": 3
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 600.0,
        "predicted_eta": 600.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 600.0,
      "position_node": "S",
      "predicted_eta": 600.0,
      "predicted_remaining": 600.0,
      "realized_sec": 90.0,
      "reroutes": 0,
      "route": {
        "cost_sec": 600.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.71,
            -74.0
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "A",
          "T"
        ],
        "snapshot_version": 1
      },
      "snapshot_version": 1,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 120.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 600.0,
          "predicted_eta": 600.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 1,
      "tick": 4
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 600.0,
        "predicted_eta": 600.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 600.0,
      "position_node": "S",
      "predicted_eta": 600.0,
      "predicted_remaining": 600.0,
      "realized_sec": 120.0,
      "reroutes": 0,
      "route": {
        "cost_sec": 600.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.71,
            -74.0
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "A",
          "T"
        ],
        "snapshot_version": 1
      },
      "snapshot_version": 1,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 150.0,
      "events_applied": [
        {
          "edge": "eSA",
          "factor": 0.4,
          "t": 150.0
        },
        {
          "edge": "eAT",
          "factor": 0.4,
          "t": 150.0
        }
      ],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 1500.0,
          "predicted_eta": 600.0,
          "ratio": 2.5,
          "triggered": true,
          "trip": "t1"
        }
      ],
      "reroutes": [
        {
          "new_cost": 720.0,
          "nodes": [
            "S",
            "B",
            "T"
          ],
          "old_live_eta": 1500.0,
          "trip": "t1"
        }
      ],
      "snapshot_version": 2,
      "tick": 5
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 1500.0,
        "predicted_eta": 600.0,
        "ratio": 2.5,
        "threshold": 0.2,
        "triggered": true
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 150.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 180.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 6
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 180.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 210.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 7
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 210.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 240.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 8
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 240.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 270.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 9
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 270.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 300.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 10
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 300.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 330.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 11
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 330.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 360.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 12
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 360.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 390.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 13
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 390.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 420.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 14
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 420.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 450.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 15
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 450.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 480.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 720.0,
          "predicted_eta": 720.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 16
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 720.0,
        "predicted_eta": 720.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 720.0,
      "position_node": "S",
      "predicted_eta": 720.0,
      "predicted_remaining": 720.0,
      "realized_sec": 480.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 510.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 17
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 510.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 540.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 18
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 540.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 570.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 19
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 570.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 600.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 20
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 600.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 630.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 21
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 630.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 660.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 22
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 660.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 690.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 23
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 690.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 720.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 24
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 720.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 750.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 25
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 750.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 780.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 26
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 780.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 810.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 27
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 810.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 840.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [
        {
          "live_eta": 360.0,
          "predicted_eta": 360.0,
          "ratio": 1.0,
          "triggered": false,
          "trip": "t1"
        }
      ],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 28
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 360.0,
      "position_node": "B",
      "predicted_eta": 720.0,
      "predicted_remaining": 360.0,
      "realized_sec": 840.0,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "active",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [
        {
          "realized_sec": 869.9999999999999,
          "trip": "t1"
        }
      ],
      "clock": 870.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 29
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 0.0,
      "position_node": "T",
      "predicted_eta": 720.0,
      "predicted_remaining": 0.0,
      "realized_sec": 869.9999999999999,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "arrived",
      "trip_id": "t1"
    }
  },
  {
    "tick": {
      "arrivals": [],
      "clock": 900.0,
      "events_applied": [],
      "rejected_updates": 0,
      "reports": [],
      "reroutes": [],
      "snapshot_version": 2,
      "tick": 30
    },
    "trip": {
      "destination": "T",
      "last_deviation": {
        "live_eta": 360.0,
        "predicted_eta": 360.0,
        "ratio": 1.0,
        "threshold": 0.2,
        "triggered": false
      },
      "live_eta": 0.0,
      "position_node": "T",
      "predicted_eta": 720.0,
      "predicted_remaining": 0.0,
      "realized_sec": 869.9999999999999,
      "reroutes": 1,
      "route": {
        "cost_sec": 720.0,
        "geometry": [
          [
            40.7,
            -74.0
          ],
          [
            40.7,
            -73.99
          ],
          [
            40.71,
            -73.99
          ]
        ],
        "nodes": [
          "S",
          "B",
          "T"
        ],
        "snapshot_version": 2
      },
      "snapshot_version": 2,
      "started_at": 0.0,
      "status": "arrived",
      "trip_id": "t1"
    }
  }
],
};
