#![allow(clippy::excessive_precision, clippy::approx_constant)]

// Reference values computed with mpmath at 200-bit precision.

/// (re s, im s, re zeta, im zeta)
pub const ZETA: &[(f64, f64, f64, f64)] = &[
    (0.8, 0.0, -4.437_538_415_895_552, 0.0),
    (-0.2, 0.0, -0.349_666_280_598_314_1, 0.0),
    (0.4, 0.0, -1.134_797_783_866_981_6, 0.0),
    (2.0, 0.0, 1.644_934_066_848_226_4, 0.0),
    (0.4, 50.0, -0.260_245_438_549_721_15, 0.322_356_580_448_898_7),
    (0.3, 1000.0, -0.920_724_494_304_227_8, 2.211_548_152_230_102),
    (0.45, 3000.0, 1.540_758_123_413_247_2, 3.896_217_097_637_664),
    (0.25, 123.4, 0.355_284_726_482_164_2, 0.962_838_121_780_512_6),
    (2.5, 77.0, 0.798_229_447_337_450_9, 0.001_968_642_383_548_511_6),
    (0.35, 9999.0, 0.868_722_645_475_755_1, 4.443_661_758_229_18),
    (0.2, 1.0, 0.032013849227102734, -0.529_370_213_765_044_8),
    (0.49, 500.5, 0.697_415_048_776_352_1, 0.175_839_267_645_470_1),
    (0.33, -77.7, 0.080_702_576_394_087_22, -1.102_623_854_681_967_3),
];

/// (re s, im s, re Gamma, im Gamma)
pub const GAMMA: &[(f64, f64, f64, f64)] = &[
    (1.0, 0.0, 1.0, 0.0),
    (0.5, 0.0, 1.772_453_850_905_516, 0.0),
    (-0.2, 0.0, -5.821_148_568_626_516_5, 0.0),
    (0.8, 0.0, 1.164_229_713_725_303_3, 0.0),
    (0.3, 2.0, 0.057_465_337_569_588_035, -0.074_984_912_582_646_14),
    (2.5, 0.0, 1.329_340_388_179_137, 0.0),
    (-0.7, 0.4, -1.823_031_403_842_119_4, 0.911_401_137_212_243_8),
    (0.6, -50.0, 9.202_606_820_772_425e-35, -2.730_308_802_690_327_4e-34),
    (5.5, 3.0, 6.243_018_517_421_103_5, -21.474_963_762_080_638),
    (-0.4, 0.0, -3.722_980_622_032_042_5, 0.0),
    (0.2, 0.0, 4.590_843_711_998_803, 0.0),
    (1.8, -7.5, -0.00026266121037591985, 0.000_032_289_675_622_731_18),
];

/// (x, arcsinh x)
pub const ARCSINH: &[(f64, f64)] = &[
    (0.5, 0.481_211_825_059_603_47),
    (1e-7, 9.999_999_999_999_984e-8),
    (30.0, 4.094_622_224_330_53),
    (-2.5, -1.647_231_146_371_095_8),
    (1e-3, 0.000_999_999_833_333_408_3),
    (1e-12, 1.0e-12),
    (4.5e9, 22.920_490_414_282_632),
    (0.7071, 0.658_473_411_637_927_9),
];

/// (nu, x, J, Y, K)
pub const BESSEL: &[(f64, f64, f64, f64, f64)] = &[
    (0.4, 0.05, 0.257_590_197_779_947_07, -3.001_014_049_692_515_5, 4.429_732_130_649_392),
    (0.4, 0.5, 0.618_801_760_805_354_5, -0.9026910300881772, 1.018_627_810_316_608_4),
    (0.4, 1.7, 0.587_548_790_074_484_4, 0.157_939_120_686_639_54, 0.171_902_969_805_600_05),
    (0.4, 2.0, 0.474_192_281_334_293_2, 0.301_052_203_604_675_77, 0.117_729_133_170_423_33),
    (0.4, 5.3, -0.256_595_408_274_732_1, -0.232_578_113_922_509_35, 0.002_696_306_013_876_367),
    (0.4, 12.5, 0.019_633_327_455_349_465, -0.224_787_875_966_680_54, 1.316_492_662_839_710_4e-6),
    (0.4, 16.9, -0.189_208_775_427_430_17, 0.043_173_431_307_870_026, 1.391_283_903_935_435_4e-8),
    (0.4, 17.1, -0.1928770043935184, 0.004_689_188_865_543_041, 1.132_439_357_912_367e-8),
    (0.4, 26.5, 0.154_810_176_477_001_96, -0.007_460_622_951_353_19, 7.531_980_035_112_677e-13),
    (0.4, 80.0, -0.089_111_920_368_429_4, -0.004_093_514_825_797_931, 2.5276306322323334e-36),
    (0.4, 400.0, -0.036_805_379_676_010_636, 0.015_391_978_761_834_506, 1.200_019_723_991_246_5e-175),
    (0.4, 1234.5, -0.000_252_751_177_487_554_77, 0.022_707_410_248_720_174, 0.0),
    (0.5, 0.05, 0.178_338_082_402_197_42, -3.563_788_851_169_038, 5.331_632_569_105_759),
    (0.5, 0.5, 0.540_973_789_934_528, -0.990_245_880_243_404_9, 1.075_047_603_499_920_3),
    (0.5, 1.7, 0.606_848_808_007_618, 0.078_846_326_861_097_34, 0.175_604_183_701_358_3),
    (0.5, 2.0, 0.513_016_136_561_827_8, 0.234_785_710_406_248_46, 0.119_937_771_968_061_45),
    (0.5, 5.3, -0.28844633974353256, -0.192_134_451_026_152_79, 0.002_717_448_045_523_424_4),
    (0.5, 12.5, -0.014967249458668383, -0.225_178_958_237_772_5, 1.321_064_153_168_019_4e-6),
    (0.5, 16.9, -0.18033100103999689, 0.071_767_256_320_315_44, 1.394_889_618_518_435e-8),
    (0.5, 17.1, -0.189_874_128_785_267_72, 0.034_308_040_927_457_366, 1.135_340_793_940_172_5e-8),
    (0.5, 26.5, 0.151_795_340_787_560_05, -0.031_329_892_302_735_675, 7.544_548_089_548_179e-13),
    (0.5, 80.0, -0.088_661_035_811_765_46, 0.009_847_227_192_444_057, 2.529_044_043_944_290_7e-36),
    (0.5, 400.0, -0.033_946_770_977_217_99, 0.020_956_291_922_457_654, 1.200_154_565_459_244_3e-175),
    (0.5, 1234.5, 0.003_301_763_249_290_154_6, 0.022_467_504_045_492_02, 0.0),
    (0.6, 0.05, 0.122_318_551_280_058_15, -4.368_448_061_245_752, 6.618_611_373_934_182),
    (0.6, 0.5, 0.468_347_326_004_403_26, -1.074_803_472_349_114_2, 1.147_536_289_420_273_2),
    (0.6, 1.7, 0.616_367_340_190_509_3, 0.000_680_320_447_890_574_9, 0.180_225_461_629_556_63),
    (0.6, 2.0, 0.542_404_959_673_252_4, 0.166_213_689_072_764_93, 0.122_688_440_297_327_16),
    (0.6, 5.3, -0.313_751_425_514_027_6, -0.147_992_822_727_185_78, 0.002_743_502_980_124_220_6),
    (0.6, 12.5, -0.04905150513105774, -0.220_320_904_621_166_4, 1.326_672_593_350_764_3e-6),
    (0.6, 16.9, -0.167_221_038_963_187_88, 0.098_560_396_838_084_06, 1.399_309_070_612_873_2e-8),
    (0.6, 17.1, -0.182_389_816_953_313_44, 0.063_009_128_329_934_22, 1.138_896_913_469_867_7e-8),
    (0.6, 26.5, 0.145_144_202_342_053_75, -0.054_391_413_803_261_65, 7.559_937_193_909_205e-13),
    (0.6, 80.0, -0.086_045_595_686_385_67, 0.023_536_588_311_061_43, 2.530_772_616_150_88e-36),
    (0.6, 400.0, -0.030_254_124_682_268_933, 0.026_004_574_938_247_87, 1.200_319_392_257_265_5e-175),
    (0.6, 1234.5, 0.006_774_839_509_873_351, 0.021_674_684_468_637_538, 0.0),
    (0.75, 0.05, 0.068_384_052_261_073_04, -6.256_979_488_699_048, 9.617_730_166_147_382),
    (0.75, 0.5, 0.371_105_519_878_429_2, -1.205_384_359_773_522_8, 1.291_749_816_217_912_6),
    (0.75, 1.7, 0.614_547_901_069_769_2, -0.112_505_684_199_081_51, 0.189_020_948_163_942_74),
    (0.75, 2.0, 0.569_821_829_174_256_8, 0.061_936_583_898_982_34, 0.127_902_978_629_179_01),
    (0.75, 5.3, -0.338_826_980_848_871_6, -0.077_169_501_794_729_66, 0.002_792_091_839_098_562_4),
    (0.75, 12.5, -0.097_519_493_686_361_76, -0.203_641_987_239_586_8, 1.337_058_108_187_671_5e-6),
    (0.75, 16.9, -0.140_421_260_303_240_31, 0.134_060_422_991_006_76, 1.407_480_876_111_288e-8),
    (0.75, 17.1, -0.163_280_391_066_213_3, 0.102_900_675_999_570_87, 1.145_472_045_513_036_1e-8),
    (0.75, 26.5, 0.128776077422092, -0.086_286_992_840_385_13, 7.588_348_301_096_799e-13),
    (0.75, 80.0, -0.078_228_581_692_444_3, 0.042_874_589_252_007_06, 2.533_957_837_885_636e-36),
    (0.75, 400.0, -0.023_355_748_246_381_87, 0.032_342_850_972_135_725, 1.200_622_882_555_413_4e-175),
    (0.75, 1234.5, 0.011_645_906_244_706_452, 0.019_495_212_212_237_236, 0.0),
    (0.8, 0.05, 0.056_114_168_852_275_23, -7.143_303_281_215_132, 11.018_879_633_967_877),
    (0.8, 0.5, 0.342_018_041_141_908_4, -1.252_145_330_322_493_2, 1.350_848_101_815_397_5),
    (0.8, 1.7, 0.610_195_558_442_400_4, -0.148_753_477_043_111_32, 0.192_488_465_722_265_13),
    (0.8, 2.0, 0.574_829_078_387_722_2, 0.027_365_660_399_296_315, 0.129_951_557_566_989_73),
    (0.8, 5.3, -0.343_693_878_175_174_44, -0.052_858_456_323_494_035, 0.002_810_903_798_677_612_3),
    (0.8, 12.5, -0.112_605_823_711_661_6, -0.195_736_028_913_418_43, 1.341_053_790_234_906_4e-6),
    (0.8, 16.9, -0.129_809_752_445_365, 0.144_377_453_930_168_13, 1.410_620_745_364_51e-8),
    (0.8, 17.1, -0.154_974_491_499_681_5, 0.115_051_552_029_523_36, 1.147_998_309_987_233e-8),
    (0.8, 26.5, 0.121_752_799_618_451_84, -0.095_949_480_531_261_36, 7.599_249_585_959_917e-13),
    (0.8, 80.0, -0.074_647_419_466_246_33, 0.048_844_163_812_283_04, 2.5351779295077488e-36),
    (0.8, 400.0, -0.020_749_462_910_394_596, 0.034_073_613_831_458_25, 1.200_739_053_449_026_7e-175),
    (0.8, 1234.5, 0.013139001312277031, 0.018_521_800_373_854_61, 0.0),
    (0.9, 0.05, 0.037_578_011_551_650_206, -9.465_594_255_659_978, 14.680_450_590_225_167),
    (0.9, 0.5, 0.288_874_172_376_483_4, -1.354_070_389_674_101, 1.488_558_051_003_004_5),
    (0.9, 1.7, 0.596_709_208_812_681_6, -0.218_621_036_641_480_58, 0.200_296_958_222_012_93),
    (0.9, 2.0, 0.579_200_259_980_495_1, -0.040_794_165_220_358_67, 0.134_550_462_165_725_58),
    (0.9, 5.3, -0.348_221_691_212_202_1, -0.003_946_228_831_690_399, 0.002_852_592_991_617_283),
    (0.9, 12.5, -0.140_682_426_981_504_52, -0.176_716_407_704_809_12, 1.349_859_413_918_165_3e-6),
    (0.9, 16.9, -0.106_458_571_929_056_35, 0.162_398_195_396_818_68, 1.417_532_320_591_784e-8),
    (0.9, 17.1, -0.135_770_848_277_516_87, 0.137_226_173_604_105_5, 1.153_558_982_244_920_7e-8),
    (0.9, 26.5, 0.10561470317750842, -0.113_483_417_461_782_17, 7.623_216_321_688_588e-13),
    (0.9, 80.0, -0.066_151_538_201_698_71, 0.059_850_390_482_209_66, 2.537_856_309_209_662_4e-36),
    (0.9, 400.0, -0.015_171_559_964_340_954, 0.036_896_828_920_112_694, 1.200_993_919_265_412_9e-175),
    (0.9, 1234.5, 0.015_873_568_668_098_23, 0.016_239_467_080_989_334, 0.0),
    (1.0, 0.05, 0.024_992_188_313_759_7, -12.789_855_171_174_97, 19.909_674_325_882_506),
    (1.0, 0.5, 0.242_268_457_674_873_9, -1.471_472_392_670_243, 1.656_441_120_003_301),
    (1.0, 1.7, 0.577_765_231_529_023_3, -0.284_726_245_064_068_4, 0.209_362_488_204_082_5),
    (1.0, 2.0, 0.576_724_807_756_873_4, -0.107_032_431_540_937_54, 0.139_865_881_816_522_43),
    (1.0, 5.3, -0.3459608338011862, 0.044_547_619_087_608_37, 0.002_899_884_491_690_688_7),
    (1.0, 12.5, -0.165_483_804_614_759_73, -0.153_838_256_537_501_2, 1.359_767_843_821_517_6e-6),
    (1.0, 16.9, -0.080_749_254_250_142_22, 0.176_631_443_090_127_04, 1.425_296_392_706_360_3e-8),
    (1.0, 17.1, -0.113_518_848_291_434_92, 0.156_173_913_148_365, 1.159_805_171_210_332e-8),
    (1.0, 26.5, 0.087_027_807_537_331_48, -0.128_305_727_731_773_23, 7.650_091_082_537_215e-13),
    (1.0, 80.0, -0.056_057_296_675_712_576, 0.069_395_913_784_588_05, 2.540_853_127_521_17e-36),
    (1.0, 400.0, -0.009_222_058_428_586_35, 0.038_813_744_980_751_54, 1.201_278_833_261_032_5e-175),
    (1.0, 1234.5, 0.018_217_508_337_392_5, 0.013_557_761_447_180_334, 0.0),
    (1.1, 0.05, 0.016_514_726_658_103_076, -17.575_496_885_248_56, 27.427_419_501_081_616),
    (1.1, 0.5, 0.201_842_476_341_131_12, -1.609_976_354_084_159_8, 1.860_592_662_655_595_8),
    (1.1, 1.7, 0.554_426_380_937_187_1, -0.346_942_351_030_079_2, 0.219_813_468_457_395_7),
    (1.1, 2.0, 0.568_250_806_179_080_4, -0.170_782_162_005_657_68, 0.145_963_482_519_406_47),
    (1.1, 5.3, -0.337_204_352_468_397_3, 0.091_718_617_892_004_85, 0.002_953_023_834_913_697),
    (1.1, 12.5, -0.186_511_387_482_040_94, -0.127_666_669_871_723_12, 1.370_801_939_223_222e-6),
    (1.1, 16.9, -0.053_293_550_046_035_906, 0.186_795_996_992_050_66, 1.4339263408897796e-8),
    (1.1, 17.1, -0.088_759_415_544_854_21, 0.171_499_110_131_577_56, 1.166_747_518_056_684_4e-8),
    (1.1, 26.5, 0.066_445_139_849_890_55, -0.140_088_662_268_926_22, 7.679_903_712_197_776e-13),
    (1.1, 80.0, -0.044_613_018_041_945_21, 0.077_252_977_509_797_73, 2.544_169_500_944_829e-36),
    (1.1, 400.0, -0.003_047_154_890_125_636, 0.039_777_745_695_546_32, 1.2015938167763374e-175),
    (1.1, 1234.5, 0.020113225797923503, 0.010_542_707_859_626_492, 0.0),
];
