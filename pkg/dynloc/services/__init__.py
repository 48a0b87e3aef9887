from .storage import StorageService

SERVICES_TO_SETUP = (StorageService,)


def setup_services(app):

    for service in SERVICES_TO_SETUP:
        service.set_up(app)
