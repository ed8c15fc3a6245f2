"""Reference numbers published for this method and for other selectors.

These values are static data rendered next to computed results and are
always labelled "published"; nothing here is recomputed.
"""

TABLES = {'svm_accuracy_large_q_included': {'description': 'SVM accuracy, large t/n, self-approving ballots',
                                   'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                   'rows': {'cardiotocography': (0.79, 0.77, 0.79, 0.78),
                                            'diabetes': (0.77, 0.76, 0.77, 0.77),
                                            'ecoli': (0.84, 0.79, 0.82, 0.84),
                                            'glass': (0.59, 0.52, 0.56, 0.52),
                                            'heart-statlog': (0.81, 0.83, 0.84, 0.84),
                                            'ionosphere': (0.86, 0.52, 0.87, 0.87),
                                            'iris': (0.97, 0.79, 0.95, 0.97),
                                            'landsat': (0.87, 0.85, 0.87, 0.87),
                                            'letter-recognition': (0.82, 0.73, 0.82, 0.82),
                                            'optdigits': (0.98, 0.96, 0.98, 0.98),
                                            'page-blocks': (0.93, 0.93, 0.93, 0.93),
                                            'parkinson': (0.87, 0.84, 0.87, 0.88),
                                            'segment': (0.93, 0.92, 0.93, 0.93),
                                            'spambase': (0.91, 0.9, 0.91, 0.92),
                                            'wine': (0.98, 0.98, 0.98, 0.99),
                                            'average': (0.86, 0.8, 0.86, 0.86)}},
 'svm_accuracy_large_q_excluded': {'description': 'SVM accuracy, large t/n, ballots without self',
                                   'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                   'rows': {'cardiotocography': (0.77, 0.76, 0.76, 0.77),
                                            'diabetes': (0.77, 0.76, 0.76, 0.76),
                                            'ecoli': (0.82, 0.83, 0.82, 0.8),
                                            'glass': (0.54, 0.49, 0.47, 0.54),
                                            'heart-statlog': (0.83, 0.81, 0.82, 0.83),
                                            'ionosphere': (0.85, 0.78, 0.86, 0.85),
                                            'iris': (0.97, 0.89, 0.96, 0.95),
                                            'landsat': (0.87, 0.86, 0.87, 0.87),
                                            'letter-recognition': (0.82, 0.75, 0.82, 0.82),
                                            'optdigits': (0.98, 0.97, 0.98, 0.98),
                                            'page-blocks': (0.94, 0.93, 0.94, 0.94),
                                            'parkinson': (0.87, 0.83, 0.87, 0.86),
                                            'segment': (0.93, 0.92, 0.93, 0.92),
                                            'spambase': (0.92, 0.9, 0.91, 0.91),
                                            'wine': (0.97, 0.97, 0.96, 0.96),
                                            'average': (0.86, 0.83, 0.85, 0.85)}},
 'knn_accuracy_large_q_included': {'description': 'KNN accuracy, large t/n, self-approving ballots',
                                   'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                   'rows': {'cardiotocography': (0.73, 0.73, 0.74, 0.73),
                                            'diabetes': (0.69, 0.68, 0.69, 0.68),
                                            'ecoli': (0.85, 0.84, 0.85, 0.85),
                                            'glass': (0.68, 0.69, 0.68, 0.68),
                                            'heart-statlog': (0.64, 0.64, 0.65, 0.64),
                                            'ionosphere': (0.86, 0.89, 0.85, 0.85),
                                            'iris': (0.96, 0.96, 0.96, 0.96),
                                            'landsat': (0.91, 0.9, 0.91, 0.9),
                                            'letter-recognition': (0.96, 0.95, 0.96, 0.95),
                                            'optdigits': (0.99, 0.98, 0.99, 0.99),
                                            'page-blocks': (0.96, 0.95, 0.96, 0.96),
                                            'parkinson': (0.83, 0.83, 0.84, 0.84),
                                            'segment': (0.96, 0.95, 0.96, 0.95),
                                            'spambase': (0.81, 0.81, 0.82, 0.81),
                                            'wine': (0.7, 0.69, 0.7, 0.76),
                                            'average': (0.83, 0.83, 0.84, 0.84)}},
 'knn_accuracy_large_q_excluded': {'description': 'KNN accuracy, large t/n, ballots without self',
                                   'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                   'rows': {'cardiotocography': (0.69, 0.69, 0.7, 0.7),
                                            'diabetes': (0.69, 0.71, 0.68, 0.68),
                                            'ecoli': (0.86, 0.86, 0.87, 0.87),
                                            'glass': (0.64, 0.67, 0.64, 0.67),
                                            'heart-statlog': (0.66, 0.66, 0.66, 0.66),
                                            'ionosphere': (0.85, 0.87, 0.84, 0.83),
                                            'iris': (0.97, 0.97, 0.97, 0.97),
                                            'landsat': (0.89, 0.89, 0.9, 0.9),
                                            'letter-recognition': (0.95, 0.94, 0.95, 0.95),
                                            'optdigits': (0.98, 0.98, 0.99, 0.98),
                                            'page-blocks': (0.96, 0.95, 0.96, 0.96),
                                            'parkinson': (0.83, 0.83, 0.83, 0.84),
                                            'segment': (0.94, 0.94, 0.95, 0.94),
                                            'spambase': (0.79, 0.79, 0.8, 0.81),
                                            'wine': (0.72, 0.71, 0.68, 0.71),
                                            'average': (0.83, 0.83, 0.83, 0.83)}},
 'reduction_large_q_included': {'description': 'reduction, large t/n, self-approving ballots',
                                'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                'rows': {'cardiotocography': (0.08, 0.36, 0.01, 0.1),
                                         'diabetes': (0.14, 0.34, 0.02, 0.1),
                                         'ecoli': (0.18, 0.52, 0.01, 0.1),
                                         'glass': (0.09, 0.38, 0.01, 0.1),
                                         'heart-statlog': (0.11, 0.23, 0.02, 0.1),
                                         'ionosphere': (0.23, 0.69, 0.02, 0.1),
                                         'iris': (0.09, 0.8, 0.0, 0.1),
                                         'landsat': (0.21, 0.71, 0.01, 0.1),
                                         'letter-recognition': (0.17, 0.74, 0.0, 0.1),
                                         'optdigits': (0.32, 0.88, 0.0, 0.1),
                                         'page-blocks': (0.13, 0.88, 0.01, 0.1),
                                         'parkinson': (0.07, 0.54, 0.0, 0.1),
                                         'segment': (0.13, 0.78, 0.0, 0.1),
                                         'spambase': (0.16, 0.51, 0.03, 0.1),
                                         'wine': (0.07, 0.45, 0.01, 0.1),
                                         'average': (0.14, 0.59, 0.01, 0.1)}},
 'reduction_large_q_excluded': {'description': 'reduction, large t/n, ballots without self',
                                'columns': ('SEJR-2', 'S2EJR-2', 'ES-2', 'SeqP-0.9'),
                                'rows': {'cardiotocography': (0.32, 0.52, 0.23, 0.19),
                                         'diabetes': (0.44, 0.58, 0.31, 0.24),
                                         'ecoli': (0.39, 0.67, 0.17, 0.14),
                                         'glass': (0.32, 0.56, 0.24, 0.22),
                                         'heart-statlog': (0.51, 0.59, 0.42, 0.33),
                                         'ionosphere': (0.36, 0.81, 0.21, 0.2),
                                         'iris': (0.15, 0.82, 0.02, 0.1),
                                         'landsat': (0.31, 0.78, 0.09, 0.1),
                                         'letter-recognition': (0.24, 0.75, 0.04, 0.1),
                                         'optdigits': (0.34, 0.88, 0.01, 0.1),
                                         'page-blocks': (0.17, 0.9, 0.04, 0.1),
                                         'parkinson': (0.23, 0.63, 0.13, 0.11),
                                         'segment': (0.17, 0.79, 0.03, 0.1),
                                         'spambase': (0.34, 0.62, 0.19, 0.14),
                                         'wine': (0.29, 0.63, 0.23, 0.21),
                                         'average': (0.31, 0.7, 0.16, 0.16)}},
 'svm_accuracy_small_q_included': {'description': 'SVM accuracy, small t/n, self-approving ballots',
                                   'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                   'rows': {'cardiotocography': (0.64, 0.72, 0.66, 0.67),
                                            'diabetes': (0.75, 0.77, 0.75, 0.76),
                                            'ecoli': (0.76, 0.78, 0.78, 0.77),
                                            'glass': (0.47, 0.47, 0.48, 0.41),
                                            'heart-statlog': (0.73, 0.77, 0.76, 0.79),
                                            'ionosphere': (0.82, 0.79, 0.81, 0.83),
                                            'iris': (0.88, 0.84, 0.9, 0.79),
                                            'landsat': (0.85, 0.85, 0.85, 0.85),
                                            'letter-recognition': (0.75, 0.74, 0.77, 0.73),
                                            'optdigits': (0.95, 0.96, 0.96, 0.95),
                                            'page-blocks': (0.93, 0.93, 0.93, 0.93),
                                            'parkinson': (0.85, 0.82, 0.84, 0.81),
                                            'segment': (0.88, 0.9, 0.88, 0.86),
                                            'spambase': (0.91, 0.91, 0.9, 0.89),
                                            'wine': (0.76, 0.96, 0.74, 0.67),
                                            'average': (0.8, 0.81, 0.8, 0.78)}},
 'svm_accuracy_small_q_excluded': {'description': 'SVM accuracy, small t/n, ballots without self',
                                   'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                   'rows': {'cardiotocography': (0.62, 0.7, 0.64, 0.66),
                                            'diabetes': (0.76, 0.75, 0.77, 0.76),
                                            'ecoli': (0.77, 0.79, 0.77, 0.76),
                                            'glass': (0.46, 0.49, 0.46, 0.5),
                                            'heart-statlog': (0.69, 0.75, 0.74, 0.75),
                                            'ionosphere': (0.83, 0.79, 0.84, 0.83),
                                            'iris': (0.86, 0.89, 0.91, 0.8),
                                            'landsat': (0.85, 0.85, 0.85, 0.85),
                                            'letter-recognition': (0.75, 0.74, 0.77, 0.73),
                                            'optdigits': (0.95, 0.96, 0.97, 0.96),
                                            'page-blocks': (0.93, 0.93, 0.94, 0.93),
                                            'parkinson': (0.82, 0.86, 0.85, 0.78),
                                            'segment': (0.87, 0.9, 0.88, 0.85),
                                            'spambase': (0.9, 0.91, 0.89, 0.89),
                                            'wine': (0.65, 0.85, 0.72, 0.7),
                                            'average': (0.78, 0.81, 0.8, 0.78)}},
 'knn_accuracy_small_q_included': {'description': 'KNN accuracy, small t/n, self-approving ballots',
                                   'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                   'rows': {'cardiotocography': (0.55, 0.62, 0.55, 0.58),
                                            'diabetes': (0.73, 0.72, 0.72, 0.75),
                                            'ecoli': (0.77, 0.84, 0.79, 0.79),
                                            'glass': (0.57, 0.6, 0.58, 0.58),
                                            'heart-statlog': (0.64, 0.63, 0.63, 0.66),
                                            'ionosphere': (0.83, 0.86, 0.83, 0.84),
                                            'iris': (0.93, 0.97, 0.93, 0.93),
                                            'landsat': (0.87, 0.89, 0.87, 0.86),
                                            'letter-recognition': (0.89, 0.92, 0.89, 0.85),
                                            'optdigits': (0.96, 0.98, 0.98, 0.96),
                                            'page-blocks': (0.94, 0.95, 0.94, 0.93),
                                            'parkinson': (0.82, 0.78, 0.82, 0.78),
                                            'segment': (0.87, 0.9, 0.89, 0.84),
                                            'spambase': (0.74, 0.77, 0.75, 0.75),
                                            'wine': (0.7, 0.71, 0.69, 0.69),
                                            'average': (0.79, 0.81, 0.79, 0.79)}},
 'knn_accuracy_small_q_excluded': {'description': 'KNN accuracy, small t/n, ballots without self',
                                   'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                   'rows': {'cardiotocography': (0.52, 0.61, 0.53, 0.56),
                                            'diabetes': (0.71, 0.74, 0.72, 0.71),
                                            'ecoli': (0.78, 0.84, 0.78, 0.77),
                                            'glass': (0.55, 0.61, 0.56, 0.59),
                                            'heart-statlog': (0.63, 0.64, 0.62, 0.64),
                                            'ionosphere': (0.84, 0.86, 0.84, 0.84),
                                            'iris': (0.93, 0.97, 0.91, 0.93),
                                            'landsat': (0.87, 0.88, 0.87, 0.86),
                                            'letter-recognition': (0.88, 0.92, 0.89, 0.84),
                                            'optdigits': (0.96, 0.98, 0.98, 0.96),
                                            'page-blocks': (0.94, 0.95, 0.94, 0.93),
                                            'parkinson': (0.8, 0.8, 0.8, 0.78),
                                            'segment': (0.86, 0.9, 0.88, 0.83),
                                            'spambase': (0.75, 0.76, 0.74, 0.75),
                                            'wine': (0.68, 0.7, 0.69, 0.69),
                                            'average': (0.78, 0.81, 0.78, 0.78)}},
 'reduction_small_q_included': {'description': 'reduction, small t/n, self-approving ballots',
                                'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                'rows': {'cardiotocography': (0.93, 0.82, 0.91, 0.9),
                                         'diabetes': (0.93, 0.86, 0.91, 0.9),
                                         'ecoli': (0.92, 0.85, 0.86, 0.9),
                                         'glass': (0.91, 0.83, 0.91, 0.9),
                                         'heart-statlog': (0.96, 0.89, 0.95, 0.9),
                                         'ionosphere': (0.87, 0.89, 0.82, 0.9),
                                         'iris': (0.83, 0.91, 0.8, 0.9),
                                         'landsat': (0.87, 0.91, 0.82, 0.9),
                                         'letter-recognition': (0.86, 0.87, 0.8, 0.9),
                                         'optdigits': (0.88, 0.94, 0.78, 0.9),
                                         'page-blocks': (0.86, 0.95, 0.78, 0.9),
                                         'parkinson': (0.88, 0.82, 0.85, 0.9),
                                         'segment': (0.86, 0.91, 0.8, 0.9),
                                         'spambase': (0.91, 0.86, 0.87, 0.9),
                                         'wine': (0.9, 0.82, 0.9, 0.9),
                                         'average': (0.89, 0.87, 0.85, 0.9)}},
 'reduction_small_q_excluded': {'description': 'reduction, small t/n, ballots without self',
                                'columns': ('SEJR-0.25', 'S2EJR-0.5', 'ES-0.25', 'SeqP-0.1'),
                                'rows': {'cardiotocography': (0.95, 0.87, 0.93, 0.9),
                                         'diabetes': (0.95, 0.9, 0.93, 0.9),
                                         'ecoli': (0.93, 0.88, 0.88, 0.9),
                                         'glass': (0.93, 0.88, 0.92, 0.9),
                                         'heart-statlog': (0.97, 0.92, 0.96, 0.9),
                                         'ionosphere': (0.87, 0.91, 0.83, 0.9),
                                         'iris': (0.83, 0.92, 0.8, 0.9),
                                         'landsat': (0.88, 0.92, 0.82, 0.9),
                                         'letter-recognition': (0.87, 0.88, 0.81, 0.9),
                                         'optdigits': (0.88, 0.94, 0.78, 0.9),
                                         'page-blocks': (0.86, 0.95, 0.78, 0.9),
                                         'parkinson': (0.9, 0.86, 0.87, 0.9),
                                         'segment': (0.87, 0.92, 0.81, 0.9),
                                         'spambase': (0.92, 0.89, 0.89, 0.9),
                                         'wine': (0.91, 0.9, 0.9, 0.9),
                                         'average': (0.9, 0.9, 0.86, 0.9)}},
 'svm_accuracy_baselines': {'description': 'SVM accuracy, no reduction / NOAPPROVED / RANDOM',
                            'columns': ('NoR', 'NoA', 'R-0.9', 'R-0.7', 'R-0.5', 'R-0.1'),
                            'rows': {'cardiotocography': (0.78, 0.77, 0.78, 0.77, 0.75, 0.65),
                                     'diabetes': (0.77, 0.75, 0.76, 0.76, 0.76, 0.72),
                                     'ecoli': (0.83, 0.82, 0.82, 0.82, 0.8, 0.71),
                                     'glass': (0.54, 0.51, 0.52, 0.52, 0.5, 0.42),
                                     'heart-statlog': (0.85, 0.82, 0.83, 0.83, 0.82, 0.77),
                                     'ionosphere': (0.88, 0.84, 0.88, 0.88, 0.87, 0.81),
                                     'iris': (0.97, 0.96, 0.96, 0.96, 0.95, 0.72),
                                     'landsat': (0.87, 0.87, 0.87, 0.86, 0.86, 0.84),
                                     'letter-recognition': (0.82, 0.82, 0.82, 0.82, 0.8, 0.72),
                                     'optdigits': (0.98, 0.98, 0.98, 0.98, 0.98, 0.96),
                                     'page-blocks': (0.93, 0.93, 0.93, 0.93, 0.92, 0.92),
                                     'parkinson': (0.87, 0.86, 0.87, 0.87, 0.85, 0.8),
                                     'segment': (0.93, 0.93, 0.93, 0.92, 0.92, 0.87),
                                     'spambase': (0.9, 0.91, 0.9, 0.9, 0.9, 0.88),
                                     'wine': (0.98, 0.97, 0.99, 0.98, 0.97, 0.92),
                                     'average': (0.86, 0.85, 0.86, 0.85, 0.84, 0.78)}},
 'knn_accuracy_baselines': {'description': 'KNN accuracy, no reduction / NOAPPROVED / RANDOM',
                            'columns': ('NoR', 'NoA', 'R-0.9', 'R-0.7', 'R-0.5', 'R-0.1'),
                            'rows': {'cardiotocography': (0.74, 0.7, 0.72, 0.7, 0.67, 0.53),
                                     'diabetes': (0.69, 0.69, 0.69, 0.71, 0.7, 0.68),
                                     'ecoli': (0.85, 0.87, 0.85, 0.84, 0.83, 0.76),
                                     'glass': (0.69, 0.65, 0.68, 0.66, 0.64, 0.5),
                                     'heart-statlog': (0.65, 0.66, 0.64, 0.64, 0.63, 0.58),
                                     'ionosphere': (0.84, 0.84, 0.84, 0.84, 0.83, 0.74),
                                     'iris': (0.96, 0.97, 0.96, 0.96, 0.96, 0.86),
                                     'landsat': (0.91, 0.91, 0.9, 0.9, 0.89, 0.86),
                                     'letter-recognition': (0.96, 0.95, 0.96, 0.95, 0.94, 0.83),
                                     'optdigits': (0.99, 0.99, 0.99, 0.99, 0.98, 0.96),
                                     'page-blocks': (0.96, 0.96, 0.96, 0.96, 0.95, 0.94),
                                     'parkinson': (0.85, 0.83, 0.85, 0.84, 0.83, 0.75),
                                     'segment': (0.96, 0.95, 0.95, 0.94, 0.93, 0.83),
                                     'spambase': (0.81, 0.8, 0.81, 0.8, 0.79, 0.71),
                                     'wine': (0.73, 0.67, 0.72, 0.7, 0.68, 0.68),
                                     'average': (0.84, 0.83, 0.84, 0.83, 0.82, 0.75)}},
 'reduction_baselines': {'description': 'reduction, NOAPPROVED / RANDOM',
                         'columns': ('NoA', 'R-0.9', 'R-0.7', 'R-0.5', 'R-0.1'),
                         'rows': {'cardiotocography': (0.19, 0.1, 0.3, 0.5, 0.9),
                                  'diabetes': (0.24, 0.1, 0.3, 0.5, 0.9),
                                  'ecoli': (0.13, 0.1, 0.3, 0.5, 0.9),
                                  'glass': (0.22, 0.1, 0.3, 0.5, 0.9),
                                  'heart-statlog': (0.34, 0.1, 0.3, 0.5, 0.9),
                                  'ionosphere': (0.2, 0.1, 0.3, 0.5, 0.9),
                                  'iris': (0.02, 0.1, 0.3, 0.5, 0.9),
                                  'landsat': (0.06, 0.1, 0.3, 0.5, 0.9),
                                  'letter-recognition': (0.02, 0.1, 0.3, 0.5, 0.9),
                                  'optdigits': (0.0, 0.1, 0.3, 0.5, 0.9),
                                  'page-blocks': (0.03, 0.1, 0.3, 0.5, 0.9),
                                  'parkinson': (0.11, 0.1, 0.3, 0.5, 0.9),
                                  'segment': (0.02, 0.1, 0.3, 0.5, 0.9),
                                  'spambase': (0.14, 0.1, 0.3, 0.5, 0.9),
                                  'wine': (0.21, 0.1, 0.3, 0.5, 0.9),
                                  'average': (0.13, 0.1, 0.3, 0.5, 0.9)}},
 'svm_accuracy_other_methods': {'description': 'SVM accuracy of other selection methods, as published',
                                'columns': ('DROP3', 'ENN', 'ICF', 'LSBo', 'LSSm', 'LDIS', 'ISDSP'),
                                'rows': {'cardiotocography': (0.64, 0.67, 0.64, 0.62, 0.67, 0.62, 0.59),
                                         'diabetes': (0.75, 0.77, 0.76, 0.75, 0.77, 0.75, 0.73),
                                         'ecoli': (0.81, 0.82, 0.78, 0.74, 0.83, 0.77, 0.78),
                                         'glass': (0.47, 0.49, 0.49, 0.42, 0.55, 0.5, 0.51),
                                         'heart-statlog': (0.81, 0.83, 0.79, 0.81, 0.84, 0.81, 0.78),
                                         'ionosphere': (0.81, 0.87, 0.58, 0.45, 0.88, 0.84, 0.86),
                                         'iris': (0.94, 0.96, 0.73, 0.47, 0.96, 0.81, 0.8),
                                         'landsat': (0.86, 0.87, 0.85, 0.85, 0.87, 0.84, 0.84),
                                         'letter-recognition': (0.8, 0.84, 0.75, 0.73, 0.84, 0.75, 0.74),
                                         'optdigits': (0.98, 0.98, 0.97, 0.98, 0.99, 0.96, 0.97),
                                         'page-blocks': (0.93, 0.94, 0.93, 0.92, 0.94, 0.94, 0.91),
                                         'parkinson': (0.85, 0.87, 0.85, 0.82, 0.87, 0.82, 0.85),
                                         'segment': (0.91, 0.92, 0.91, 0.8, 0.91, 0.89, 0.88),
                                         'spambase': (0.9, 0.9, 0.9, 0.9, 0.9, 0.89, 0.87),
                                         'wine': (0.93, 0.95, 0.94, 0.96, 0.97, 0.94, 0.93),
                                         'average': (0.83, 0.84, 0.79, 0.75, 0.85, 0.81, 0.8)}},
 'knn_accuracy_other_methods': {'description': 'KNN accuracy of other selection methods, as published',
                                'columns': ('DROP3', 'ENN', 'ICF', 'LSBo', 'LSSm', 'LDIS', 'ISDSP'),
                                'rows': {'cardiotocography': (0.63, 0.64, 0.57, 0.55, 0.67, 0.54, 0.5),
                                         'diabetes': (0.72, 0.72, 0.72, 0.73, 0.72, 0.68, 0.65),
                                         'ecoli': (0.84, 0.84, 0.79, 0.79, 0.86, 0.82, 0.82),
                                         'glass': (0.63, 0.63, 0.64, 0.54, 0.71, 0.62, 0.55),
                                         'heart-statlog': (0.67, 0.64, 0.63, 0.66, 0.66, 0.67, 0.63),
                                         'ionosphere': (0.82, 0.83, 0.82, 0.88, 0.86, 0.85, 0.85),
                                         'iris': (0.97, 0.97, 0.95, 0.95, 0.96, 0.95, 0.95),
                                         'landsat': (0.88, 0.9, 0.83, 0.86, 0.9, 0.87, 0.86),
                                         'letter-recognition': (0.88, 0.92, 0.8, 0.73, 0.93, 0.79, 0.71),
                                         'optdigits': (0.97, 0.98, 0.91, 0.91, 0.98, 0.95, 0.94),
                                         'page-blocks': (0.95, 0.96, 0.93, 0.94, 0.96, 0.94, 0.77),
                                         'parkinson': (0.86, 0.88, 0.83, 0.85, 0.85, 0.74, 0.79),
                                         'segment': (0.92, 0.94, 0.87, 0.83, 0.94, 0.88, 0.89),
                                         'spambase': (0.79, 0.81, 0.79, 0.81, 0.82, 0.75, 0.77),
                                         'wine': (0.69, 0.66, 0.66, 0.74, 0.71, 0.69, 0.75),
                                         'average': (0.82, 0.82, 0.78, 0.79, 0.83, 0.78, 0.76)}},
 'reduction_other_methods': {'description': 'reduction of other selection methods, as published',
                             'columns': ('DROP3', 'ENN', 'ICF', 'LSBo', 'LSSm', 'LDIS', 'ISDSP'),
                             'rows': {'cardiotocography': (0.7, 0.32, 0.71, 0.69, 0.14, 0.86, 0.9),
                                      'diabetes': (0.77, 0.31, 0.85, 0.76, 0.13, 0.9, 0.9),
                                      'ecoli': (0.72, 0.17, 0.87, 0.83, 0.09, 0.92, 0.9),
                                      'glass': (0.75, 0.35, 0.69, 0.7, 0.13, 0.9, 0.9),
                                      'heart-statlog': (0.74, 0.35, 0.78, 0.67, 0.15, 0.93, 0.9),
                                      'ionosphere': (0.86, 0.15, 0.96, 0.81, 0.04, 0.91, 0.9),
                                      'iris': (0.7, 0.04, 0.61, 0.92, 0.05, 0.87, 0.9),
                                      'landsat': (0.72, 0.1, 0.91, 0.88, 0.05, 0.92, 0.9),
                                      'letter-recognition': (0.68, 0.05, 0.8, 0.84, 0.04, 0.82, 0.9),
                                      'optdigits': (0.72, 0.01, 0.93, 0.92, 0.02, 0.92, 0.9),
                                      'page-blocks': (0.71, 0.04, 0.95, 0.96, 0.03, 0.87, 0.9),
                                      'parkinson': (0.72, 0.15, 0.8, 0.87, 0.11, 0.83, 0.9),
                                      'segment': (0.68, 0.05, 0.79, 0.9, 0.05, 0.83, 0.9),
                                      'spambase': (0.74, 0.19, 0.79, 0.82, 0.1, 0.82, 0.9),
                                      'wine': (0.8, 0.3, 0.82, 0.75, 0.11, 0.88, 0.9),
                                      'average': (0.73, 0.17, 0.82, 0.82, 0.08, 0.88, 0.9)}}}


def lookup(table: str, dataset: str, column: str) -> float | None:
    """Published value for ``dataset`` in ``column`` of ``table`` (None if absent)."""
    entry = TABLES[table]
    row = entry["rows"].get(dataset)
    if row is None or column not in entry["columns"]:
        return None
    return row[entry["columns"].index(column)]
