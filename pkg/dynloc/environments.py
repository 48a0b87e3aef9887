from .services import setup_services
from .tasks import Queues


def setup_environments(app):

    Queues.set_up(app.config)
    setup_services(app)
